//! Exhaustive and configuration-based checks of `λ(G) ≤ λ(C_{3,m})`.
//!
//! A cell `(t, m)` covers every left-compressed 3-graph on `[t]` with `m`
//! edges. Compression never lowers the Lagrangian, so the maximum over a cell
//! is the maximum over all 3-graphs on `t` vertices with `m` edges.

mod config;

use rayon::prelude::*;
use serde::Serialize;

pub use config::{
    all_configurations, build_configuration, check_theorem_inequality, ConfigurationSpec, Family,
    InequalityCheck, INEQUALITY_TOL,
};

use crate::edge::binomial;
use crate::error::{Error, Result};
use crate::graph::RGraph;
use crate::lagrangian::{lagrangian, LagrangianResult, SolverOptions};
use crate::poset::{LeftCompressedEnumerator, MAX_ENUM_T};
use crate::report::SCHEMA_VERSION;

/// Values within this distance of the cell maximum are recorded as witnesses.
pub const WITNESS_TOL: f64 = 1e-9;

/// Largest `t` a sweep accepts.
pub const MAX_SWEEP_T: u32 = MAX_ENUM_T;

/// Stated in every report: what the enumeration covers.
pub const SCOPE: &str = "left-compressed 3-graphs on [t]; compression does not decrease the Lagrangian";

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub solver: SolverOptions,
    /// Per-cell cap on enumerated graphs; a cell that hits it is reported partial.
    pub max_graphs: Option<usize>,
}

/// A graph attaining the cell maximum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// Edge-list text.
    pub edges: String,
    #[serde(serialize_with = "crate::report::sig17")]
    pub value: f64,
    /// Size of the optimal weighting's support.
    pub support: usize,
    /// `|E(G) Δ E(C_{3,m})|`.
    pub colex_distance: usize,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub t: u32,
    pub m: u64,
    /// `C(t,3) − m`.
    pub a: Option<i64>,
    #[serde(serialize_with = "crate::report::sig17")]
    pub colex_value: f64,
    #[serde(serialize_with = "crate::report::sig17")]
    pub max_value: f64,
    /// `colex_value − max_value`.
    #[serde(serialize_with = "crate::report::sig17")]
    pub gap: f64,
    pub graph_count: u64,
    /// Sorted by the colex ranks of their edges.
    pub witnesses: Vec<Witness>,
    pub colex_among_witnesses: bool,
    /// Solves that missed certification.
    pub uncertified: u64,
    /// The enumeration budget ran out before the cell was exhausted.
    pub partial: bool,
    pub all_pass: bool,
    pub seed: u64,
    pub scope: &'static str,
}

/// The cell window `C(t−1,3) ≤ m ≤ C(t,3)`.
pub fn cell_window(t: u32) -> std::ops::RangeInclusive<u64> {
    binomial(t as u64 - 1, 3)..=binomial(t as u64, 3)
}

fn check_cell(t: u32, m: u64) -> Result<()> {
    if t < 4 {
        return Err(Error::OutOfRange(format!("cells need t >= 4, got t = {t}")));
    }
    if t > MAX_SWEEP_T {
        return Err(Error::OutOfRange(format!(
            "cells are limited to t <= {MAX_SWEEP_T}, got t = {t}"
        )));
    }
    let w = cell_window(t);
    if !w.contains(&m) {
        return Err(Error::OutOfRange(format!(
            "m = {m} is outside the window {}..={} for t = {t}",
            w.start(),
            w.end()
        )));
    }
    Ok(())
}

/// Solve every left-compressed 3-graph on `[t]` with `m` edges.
pub fn verify_cell(t: u32, m: u64, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_cell(t, m)?;
    let mut it = LeftCompressedEnumerator::new(t, m as usize)?;
    let cap = opts.max_graphs.unwrap_or(usize::MAX);
    let mut masks = Vec::new();
    let mut partial = false;
    while let Some(mask) = it.next_mask() {
        if masks.len() == cap {
            partial = true;
            break;
        }
        masks.push(mask);
    }

    let solved: Vec<(RGraph, LagrangianResult)> = masks
        .par_iter()
        .map(|&mask| {
            let g = LeftCompressedEnumerator::graph_from_mask(t, mask);
            let res = lagrangian(&g, &opts.solver);
            (g, res)
        })
        .collect();

    let colex = RGraph::colex(3, m).with_n(t)?;
    let colex_value = match solved.iter().find(|(g, _)| *g == colex) {
        Some((_, res)) => res.value,
        None => lagrangian(&colex, &opts.solver).value,
    };
    let max_value = solved
        .iter()
        .map(|(_, res)| res.value)
        .fold(colex_value, f64::max);
    let uncertified = solved.iter().filter(|(_, res)| !res.certified).count() as u64;

    let mut winners: Vec<&(RGraph, LagrangianResult)> = solved
        .iter()
        .filter(|(_, res)| res.value >= max_value - WITNESS_TOL)
        .collect();
    winners.sort_by_cached_key(|(g, _)| g.ranks().collect::<Vec<_>>());
    let colex_among_witnesses = winners.iter().any(|(g, _)| *g == colex);
    let witnesses = winners
        .into_iter()
        .map(|(g, res)| Witness {
            edges: g.to_edge_list(),
            value: res.value,
            support: res.support,
            colex_distance: g.symmetric_difference_size(&colex),
            certified: res.certified,
        })
        .collect();

    let gap = colex_value - max_value;
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        t,
        m,
        a: Some(binomial(t as u64, 3) as i64 - m as i64),
        colex_value,
        max_value,
        gap,
        graph_count: solved.len() as u64,
        witnesses,
        colex_among_witnesses,
        uncertified,
        partial,
        all_pass: gap >= -INEQUALITY_TOL && uncertified == 0 && !partial,
        seed: opts.solver.seed,
        scope: SCOPE,
    })
}

/// Every cell `(t, m)` with `4 ≤ t ≤ t_max`, ordered by `(t, m)`.
pub fn sweep_cells(t_max: u32) -> Vec<(u32, u64)> {
    (4..=t_max)
        .flat_map(|t| cell_window(t).map(move |m| (t, m)))
        .collect()
}

/// Run [`verify_cell`] on every cell of [`sweep_cells`]. Cells run in
/// parallel; the output order is fixed.
pub fn sweep(t_max: u32, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    if !(4..=MAX_SWEEP_T).contains(&t_max) {
        return Err(Error::OutOfRange(format!(
            "sweep needs 4 <= t_max <= {MAX_SWEEP_T}, got {t_max}"
        )));
    }
    sweep_cells(t_max)
        .par_iter()
        .map(|&(t, m)| verify_cell(t, m, opts))
        .collect()
}

/// Lower bound on `m` for a graph whose optimal weighting has support `k`.
pub fn support_lower_bound(k: usize) -> i64 {
    let k = k as u64;
    if k < 2 {
        return 0;
    }
    binomial(k - 1, 3) as i64 + binomial(k - 2, 2) as i64 - (k as i64 - 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportBoundCheck {
    pub t: u32,
    pub m: u64,
    /// `(support, lower bound on m)` for each witness.
    pub witnesses: Vec<(usize, i64)>,
    /// Every witness satisfies `m ≥ bound(k)`.
    pub edge_bound: bool,
    /// Every witness has support at most `t`.
    pub vertex_bound: bool,
    pub pass: bool,
}

/// Check the support-size bounds on the witnesses of a finished cell.
pub fn check_support_bound(report: &VerificationReport) -> SupportBoundCheck {
    let witnesses: Vec<(usize, i64)> = report
        .witnesses
        .iter()
        .map(|w| (w.support, support_lower_bound(w.support)))
        .collect();
    let edge_bound = witnesses.iter().all(|&(_, b)| report.m as i64 >= b);
    let vertex_bound = witnesses.iter().all(|&(k, _)| k as u64 <= report.t as u64);
    SupportBoundCheck {
        t: report.t,
        m: report.m,
        witnesses,
        edge_bound,
        vertex_bound,
        pass: edge_bound && vertex_bound && report.witnesses.iter().all(|w| w.certified),
    }
}

/// `m = C(t−1,3) + C(t−2,2) + a` for the Δ-bound parameterization.
pub fn delta_cell_m(t: u32, a: i64) -> i64 {
    let t64 = t as u64;
    binomial(t64 - 1, 3) as i64 + binomial(t64 - 2, 2) as i64 + a
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaBoundCheck {
    pub t: u32,
    pub a: i64,
    pub m: u64,
    /// `2(t − a − 2)`.
    pub bound: i64,
    /// `|E(G) Δ E(C_{3,m})|` for each witness.
    pub distances: Vec<usize>,
    pub pass: bool,
}

/// The Δ-bound parameter range `−(t−2) ≤ a ≤ t−5`.
pub fn delta_range(t: u32) -> std::ops::RangeInclusive<i64> {
    -(t as i64 - 2)..=t as i64 - 5
}

/// Check that every witness of the cell differs from `C_{3,m}` in at most
/// `2(t − a − 2)` edges. `report` must be the cell for `delta_cell_m(t, a)`.
pub fn delta_bound_from_report(t: u32, a: i64, report: &VerificationReport) -> Result<DeltaBoundCheck> {
    if t < 5 || !delta_range(t).contains(&a) {
        return Err(Error::OutOfRange(format!(
            "the Δ bound requires −(t−2) ≤ a ≤ t−5 (t = {t}, a = {a})"
        )));
    }
    let m = delta_cell_m(t, a) as u64;
    if report.t != t || report.m != m {
        return Err(Error::OutOfRange(format!(
            "report is for cell ({}, {}), expected ({t}, {m})",
            report.t, report.m
        )));
    }
    let bound = 2 * (t as i64 - a - 2);
    let distances: Vec<usize> = report.witnesses.iter().map(|w| w.colex_distance).collect();
    let pass = !report.partial && distances.iter().all(|&d| d as i64 <= bound);
    Ok(DeltaBoundCheck {
        t,
        a,
        m,
        bound,
        distances,
        pass,
    })
}

/// Run the cell for `(t, a)` and check the Δ bound on its witnesses.
pub fn check_delta_bound(t: u32, a: i64, opts: &VerifyOptions) -> Result<DeltaBoundCheck> {
    if t < 5 || !delta_range(t).contains(&a) {
        return Err(Error::OutOfRange(format!(
            "the Δ bound requires −(t−2) ≤ a ≤ t−5 (t = {t}, a = {a})"
        )));
    }
    let report = verify_cell(t, delta_cell_m(t, a) as u64, opts)?;
    delta_bound_from_report(t, a, &report)
}

/// `C(t−1,3) ..= C(t−1,3) + C(t−2,2) − slack`, the lower part of the cell
/// window where the inequality is known to hold for the given slack.
pub fn lower_window(t: u32, slack: u64) -> std::ops::RangeInclusive<u64> {
    let t64 = t as u64;
    let lo = binomial(t64 - 1, 3);
    lo..=(lo + binomial(t64 - 2, 2)).saturating_sub(slack).max(lo)
}

/// The cells four to six edges short of `[t]^(3)`: `C(t,3)−6 ..= C(t,3)−3`.
pub fn near_complete_window(t: u32) -> std::ops::RangeInclusive<u64> {
    let top = binomial(t as u64, 3);
    top - 6..=top - 3
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn smallest_cells() {
        let r = verify_cell(4, 4, &quick()).unwrap();
        assert_eq!(r.graph_count, 1);
        assert_eq!(r.gap, 0.0);
        assert_eq!(r.a, Some(0));
        assert!(r.all_pass && r.colex_among_witnesses);

        let r = verify_cell(5, 5, &quick()).unwrap();
        assert!(r.all_pass);
        assert!((r.colex_value - 0.0625).abs() < 1e-12);
    }

    #[test]
    fn windows_and_refusals() {
        assert_eq!(sweep_cells(4).len(), 4);
        assert_eq!(sweep_cells(5).len(), 11);
        assert_eq!(sweep_cells(6).len(), 22);
        assert!(verify_cell(3, 1, &quick()).is_err());
        assert!(verify_cell(5, 3, &quick()).is_err());
        assert!(verify_cell(9, 60, &quick()).is_err());
        assert!(sweep(9, &quick()).is_err());
    }

    #[test]
    fn budget_marks_cell_partial() {
        let opts = VerifyOptions {
            max_graphs: Some(1),
            ..quick()
        };
        let r = verify_cell(6, 15, &opts).unwrap();
        assert!(r.partial && !r.all_pass);
        assert_eq!(r.graph_count, 1);
    }

    #[test]
    fn support_bound_arithmetic() {
        assert_eq!(support_lower_bound(4), 0);
        assert_eq!(support_lower_bound(5), 4);
        assert_eq!(support_lower_bound(3), -1);
        let r = verify_cell(5, 10, &quick()).unwrap();
        let c = check_support_bound(&r);
        assert_eq!(c.witnesses, vec![(5, 4)]);
        assert!(c.pass);
    }

    #[test]
    fn delta_parameterization() {
        assert_eq!(delta_cell_m(5, 0), 7);
        assert_eq!(delta_cell_m(6, -1), 15);
        assert_eq!(delta_cell_m(6, 1), 17);
        let c = check_delta_bound(5, 0, &quick()).unwrap();
        assert_eq!(c.bound, 6);
        assert!(c.pass);
        assert!(check_delta_bound(6, 2, &quick()).is_err());
    }

    #[test]
    fn range_helpers() {
        assert_eq!(lower_window(6, 0), 10..=16);
        assert_eq!(lower_window(6, 2), 10..=14);
        assert_eq!(near_complete_window(7), 29..=32);
    }
}
