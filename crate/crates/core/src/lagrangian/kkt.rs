use serde::Serialize;

use super::poly::family_value;
use crate::error::Result;
use crate::graph::RGraph;
use crate::weighting::Weighting;

/// Outcome of checking the first-order optimality conditions at a weighting.
#[derive(Clone, Debug, Serialize)]
pub struct KktReport {
    /// 1-based vertices with weight above the support threshold.
    pub support: Vec<u32>,
    /// `max_{i ∈ support} |λ(E_i, x) − r·value|`.
    pub residual: f64,
    /// `max(0, max_{i ∉ support} λ(E_i, x) − r·value)`; positive means the
    /// weighting could be improved by moving weight onto an unused vertex.
    pub outside_excess: f64,
    /// Every pair of supported vertices lies in a common edge.
    pub pair_cover: bool,
    pub uncovered_pairs: Vec<(u32, u32)>,
    /// For left-compressed graphs: `max |(x_i − x_j)·λ(E_ij, x) − λ(E_{i\j}, x)|`
    /// over supported `i < j`.
    pub pair_equation_residual: Option<f64>,
}

/// Check the stationarity conditions of an optimal weighting for `g` with
/// claimed Lagrangian `value`.
pub fn kkt_check(g: &RGraph, x: &Weighting, value: f64, threshold: f64) -> Result<KktReport> {
    let xs = x.as_slice();
    let target = g.r() as f64 * value;
    let support: Vec<u32> = x
        .support(threshold)
        .into_iter()
        .filter(|&v| v <= g.n())
        .collect();
    let mut residual = 0.0f64;
    let mut outside = 0.0f64;
    for v in 1..=g.n() {
        let lv = family_value(&g.link(v)?, xs);
        if support.contains(&v) {
            residual = residual.max((lv - target).abs());
        } else {
            outside = outside.max(lv - target);
        }
    }
    let mut uncovered = Vec::new();
    for (a, &i) in support.iter().enumerate() {
        for &j in &support[a + 1..] {
            if !g.edges().iter().any(|e| e.contains(i) && e.contains(j)) {
                uncovered.push((i, j));
            }
        }
    }
    let pair_equation_residual = if g.is_left_compressed() {
        let mut worst = 0.0f64;
        for (a, &i) in support.iter().enumerate() {
            for &j in &support[a + 1..] {
                let lhs = (x.weight(i) - x.weight(j)) * family_value(&g.pair_link(i, j)?, xs);
                let rhs = family_value(&g.difference_link(i, j)?, xs);
                worst = worst.max((lhs - rhs).abs());
            }
        }
        Some(worst)
    } else {
        None
    };
    Ok(KktReport {
        support,
        residual,
        outside_excess: outside,
        pair_cover: uncovered.is_empty(),
        uncovered_pairs: uncovered,
        pair_equation_residual,
    })
}
