//! Independent Lagrangian route: enumerate candidate supports and solve the
//! equal-link stationarity system on each.

use super::ascent::{face_ascent, newton_on_support, Reduced};
use super::kkt::kkt_check;
use super::poly::Multilinear;
use super::{LagrangianResult, Method};
use crate::edge::binomial;
use crate::graph::RGraph;
use crate::weighting::Weighting;

/// Default cap on the number of candidate supports examined.
pub const DEFAULT_SUPPORT_BUDGET: u64 = 1 << 20;

/// [`support_enumeration_with_budget`] with [`DEFAULT_SUPPORT_BUDGET`].
pub fn support_enumeration(g: &RGraph, max_support: usize) -> LagrangianResult {
    support_enumeration_with_budget(g, max_support, DEFAULT_SUPPORT_BUDGET)
}

/// Maximize `λ(G, x)` by trying every support `S` of at most `max_support`
/// non-isolated vertices whose pairs are all covered by edges inside `S`.
/// On each support the equal-link system is solved by Newton from the uniform
/// weighting, and also by a constrained ascent from the same point followed
/// by a Newton polish; the best strictly positive solution wins, smaller
/// supports winning ties.
///
/// If more than `budget` supports would be needed the search stops early and
/// the result is returned uncertified.
pub fn support_enumeration_with_budget(g: &RGraph, max_support: usize, budget: u64) -> LagrangianResult {
    let n = g.n() as usize;
    let active: Vec<usize> = {
        let iso = g.isolated_vertices();
        (1..=g.n()).filter(|v| !iso.contains(v)).map(|v| v as usize - 1).collect()
    };
    let poly = Multilinear::new(g);
    let red = Reduced::new(&poly, (0..n).map(|v| vec![v]).collect());

    let mut covered = vec![false; n * n];
    for e in g.edges() {
        for &a in e.vertices() {
            for &b in e.vertices() {
                covered[(a as usize - 1) * n + b as usize - 1] = true;
            }
        }
    }

    let top = max_support.min(active.len());
    let mut examined = 0u64;
    let mut partial = false;
    let mut best: Option<(f64, Vec<f64>)> = None;
    'sizes: for k in g.r()..=top {
        for rank in 0..binomial(active.len() as u64, k as u64) {
            if examined >= budget {
                partial = true;
                break 'sizes;
            }
            examined += 1;
            let pick = crate::edge::Edge::colex_unrank(k, rank);
            let support: Vec<usize> = pick.vertices().iter().map(|&i| active[i as usize - 1]).collect();
            let all_covered = support
                .iter()
                .enumerate()
                .all(|(a, &u)| support[a + 1..].iter().all(|&v| covered[u * n + v]));
            if !all_covered {
                continue;
            }
            let uniform = vec![1.0; n];
            let found = [
                newton_on_support(&red, &uniform, &support),
                face_ascent(&red, &support, 500).and_then(|w| newton_on_support(&red, &w, &support)),
            ];
            for x in found.into_iter().flatten() {
                let val = poly.value(&x);
                if best.as_ref().is_none_or(|(b, _)| val > b + 1e-12) {
                    best = Some((val, x));
                }
            }
        }
    }

    let (value, weighting) = match best {
        Some((v, x)) => (v, Weighting::normalized(x)),
        None => (0.0, Weighting::uniform(n)),
    };
    let report = kkt_check(g, &weighting, value, 1e-10).expect("dimensions match");
    let support = if value == 0.0 { 0 } else { report.support.len() };
    LagrangianResult {
        value,
        weighting,
        support,
        kkt_residual: report.residual,
        method: Method::SupportEnumeration,
        certified: !partial && report.residual <= 1e-8 && report.outside_excess <= 1e-8,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_full_support() {
        let res = support_enumeration(&RGraph::complete(3, 4), 4);
        assert!((res.value - 0.0625).abs() < 1e-15);
        assert_eq!(res.support, 4);
        assert!(res.certified);
    }

    #[test]
    fn five_cycle_uses_an_edge() {
        let g = RGraph::from_lists(2, 5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let res = support_enumeration(&g, 5);
        assert!((res.value - 0.25).abs() < 1e-15);
        assert_eq!(res.support, 2);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let res = support_enumeration_with_budget(&RGraph::complete(3, 6), 6, 3);
        assert!(!res.certified);
    }
}
