//! Lagrangians of uniform hypergraphs.
//!
//! [`lagrangian`] runs multi-start projected gradient ascent on the simplex,
//! over one weight per symmetry class when the graph is left-compressed,
//! then polishes every run by Newton's method on the equal-link system
//! `λ(E_i, x) = r·λ(G)` over the active support. Small graphs are
//! cross-checked against [`support_enumeration`].

mod ascent;
mod clique;
mod kkt;
mod linalg;
mod poly;
mod support;
mod symmetry;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use clique::{clique_number, lagrangian_2graph_oracle, max_clique, MAX_CLIQUE_N};
pub use kkt::{kkt_check, KktReport};
pub use poly::{evaluate, family_value, link_value};
pub use support::{support_enumeration, support_enumeration_with_budget, DEFAULT_SUPPORT_BUDGET};
pub use symmetry::symmetry_classes;

use ascent::{ascend, newton_on_support, polish, AscentParams, Reduced};
use poly::Multilinear;

use crate::graph::RGraph;
use crate::weighting::Weighting;

/// Default global seed.
pub const DEFAULT_SEED: u64 = 0xF2F2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverOptions {
    /// Gradient iterations per start.
    pub max_iterations: usize,
    pub step_tol: f64,
    pub value_tol: f64,
    /// Certification bound on the stationarity residual.
    pub kkt_tol: f64,
    /// Number of starts: the uniform weighting plus `starts - 1` random ones.
    pub starts: usize,
    pub seed: u64,
    /// A weight counts as positive above this threshold.
    pub support_threshold: f64,
    /// Values within this distance of the best are treated as ties.
    pub tie_tol: f64,
    /// Graphs with at most this many vertices are cross-checked by support enumeration.
    pub cross_check_max_n: u32,
    /// Allowed disagreement with the support-enumeration cross-check.
    pub cross_check_tol: f64,
    /// Optimize one weight per symmetry class on left-compressed graphs.
    pub use_symmetry: bool,
    /// Answer 2-graphs from the clique number instead of optimizing.
    pub closed_form_2graph: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_iterations: 10_000,
            step_tol: 1e-14,
            value_tol: 1e-12,
            kkt_tol: 1e-8,
            starts: 32,
            seed: DEFAULT_SEED,
            support_threshold: 1e-10,
            tie_tol: 1e-9,
            cross_check_max_n: 6,
            cross_check_tol: 1e-8,
            use_symmetry: true,
            closed_form_2graph: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm2graph,
    SymmetryReduced,
    MultistartGradient,
    SupportEnumeration,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LagrangianResult {
    #[serde(serialize_with = "crate::report::sig17")]
    pub value: f64,
    #[serde(serialize_with = "crate::report::sig17_weighting")]
    pub weighting: Weighting,
    /// Number of vertices with positive weight.
    pub support: usize,
    #[serde(serialize_with = "crate::report::sig17")]
    pub kkt_residual: f64,
    pub method: Method,
    pub certified: bool,
}

fn mix_seed(seed: u64, hash: u64) -> u64 {
    // splitmix64 finalizer over the combined words
    let mut z = seed ^ hash.rotate_left(17) ^ 0x9E37_79B9_7F4A_7C15;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Variable classes over the non-isolated vertices (0-based).
fn variable_classes(g: &RGraph, opts: &SolverOptions) -> (Vec<Vec<usize>>, Method) {
    let isolated = g.isolated_vertices();
    let active = |v: &u32| !isolated.contains(v);
    if opts.use_symmetry {
        if let Ok(classes) = symmetry_classes(g) {
            let classes = classes
                .into_iter()
                .map(|c| c.into_iter().filter(active).map(|v| v as usize - 1).collect::<Vec<_>>())
                .filter(|c| !c.is_empty())
                .collect();
            return (classes, Method::SymmetryReduced);
        }
    }
    let classes = (1..=g.n()).filter(active).map(|v| vec![v as usize - 1]).collect();
    (classes, Method::MultistartGradient)
}

/// Move all weight of `j` onto `i` while some supported pair `i < j` shares no
/// edge. At a stationary point this leaves `λ(G, x)` unchanged.
fn reduce_support(g: &RGraph, x: &mut [f64], threshold: f64) {
    loop {
        let support: Vec<usize> = (0..x.len()).filter(|&v| x[v] > threshold).collect();
        let pair = support.iter().enumerate().find_map(|(a, &i)| {
            support[a + 1..]
                .iter()
                .find(|&&j| {
                    !g.edges()
                        .iter()
                        .any(|e| e.contains(i as u32 + 1) && e.contains(j as u32 + 1))
                })
                .map(|&j| (i, j))
        });
        match pair {
            Some((i, j)) => {
                x[i] += x[j];
                x[j] = 0.0;
            }
            None => return,
        }
    }
}

/// Clean up a near-optimal weighting: zero sub-threshold weights, enforce a
/// pair-covered support, reorder non-increasingly when left-compressed, and
/// re-solve the stationarity system on the final support.
fn finalize(g: &RGraph, poly: &Multilinear, x: &[f64], opts: &SolverOptions, compressed: bool) -> Vec<f64> {
    let mut x: Vec<f64> = x
        .iter()
        .map(|&v| if v > opts.support_threshold { v } else { 0.0 })
        .collect();
    let before = poly.value(&x);
    reduce_support(g, &mut x, opts.support_threshold);
    if compressed {
        x.sort_by(|a, b| b.total_cmp(a));
    }
    let singletons = Reduced::new(poly, (0..poly.n).map(|v| vec![v]).collect());
    let support: Vec<usize> = (0..x.len()).filter(|&v| x[v] > 0.0).collect();
    if let Some(refined) = newton_on_support(&singletons, &x, &support) {
        let mut refined = refined;
        if compressed {
            refined.sort_by(|a, b| b.total_cmp(a));
        }
        if poly.value(&refined) >= before - opts.tie_tol {
            x = refined;
        }
    }
    let sum: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= sum);
    x
}

struct Candidate {
    value: f64,
    x: Vec<f64>,
}

/// `λ(G)` with an optimal weighting and a certification verdict.
pub fn lagrangian(g: &RGraph, opts: &SolverOptions) -> LagrangianResult {
    let n = g.n() as usize;
    let compressed = g.is_left_compressed();
    let (classes, method) = variable_classes(g, opts);
    if g.is_empty() {
        return LagrangianResult {
            value: 0.0,
            weighting: Weighting::uniform(n),
            support: 0,
            kkt_residual: 0.0,
            method,
            certified: true,
        };
    }
    if opts.closed_form_2graph && g.r() == 2 && g.n() <= MAX_CLIQUE_N {
        return closed_form(g, opts);
    }

    let poly = Multilinear::new(g);
    let red = Reduced::new(&poly, classes);
    let params = AscentParams {
        max_iterations: opts.max_iterations,
        step_tol: opts.step_tol,
        value_tol: opts.value_tol,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(opts.seed, g.canonical_hash()));
    let d = red.dim();
    let mut runs: Vec<Candidate> = Vec::with_capacity(opts.starts.max(1));
    for s in 0..opts.starts.max(1) {
        let start: Vec<f64> = if s == 0 {
            (0..d).map(|c| red.class_size(c) as f64).collect()
        } else {
            // Dirichlet(1, …, 1) via normalized exponentials
            (0..d).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect()
        };
        let total: f64 = start.iter().sum();
        let start: Vec<f64> = start.iter().map(|v| v / total).collect();
        let (mut w, mut f, _) = ascend(&red, start, &params);
        if let Some((wp, fp)) = polish(&red, &w, f - 1e-12) {
            w = wp;
            f = fp;
        }
        runs.push(Candidate {
            value: f,
            x: red.expand(&w),
        });
    }

    let best = runs.iter().map(|c| c.value).fold(f64::NEG_INFINITY, f64::max);
    let agreeing = runs.iter().filter(|c| c.value >= best - opts.tie_tol).count();

    // Among tied runs prefer the smallest support, then the lexicographically
    // largest weighting.
    let mut chosen: Option<(usize, Vec<f64>)> = None;
    for c in runs.iter().filter(|c| c.value >= best - opts.tie_tol) {
        let x = finalize(g, &poly, &c.x, opts, compressed);
        let k = x.iter().filter(|&&v| v > opts.support_threshold).count();
        let better = match &chosen {
            None => true,
            Some((bk, bx)) => k < *bk || (k == *bk && lex_greater(&x, bx)),
        };
        if better {
            chosen = Some((k, x));
        }
    }
    let (_, x) = chosen.expect("at least one run");
    let mut result = package(g, &poly, x, method, opts);
    result.certified &= agreeing >= opts.starts.clamp(1, 2);

    if g.n() <= opts.cross_check_max_n {
        let check = support_enumeration(g, g.n() as usize);
        if check.value > result.value + opts.tie_tol {
            // the cross-check found something better: report it, uncertified
            let mut alt = check;
            alt.certified = false;
            return alt;
        }
        if (check.value - result.value).abs() > opts.cross_check_tol {
            result.certified = false;
        }
    }
    result
}

fn lex_greater(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x > y;
        }
    }
    false
}

fn package(g: &RGraph, poly: &Multilinear, x: Vec<f64>, method: Method, opts: &SolverOptions) -> LagrangianResult {
    let weighting = Weighting::normalized(x);
    let value = poly.value(weighting.as_slice());
    let report = kkt_check(g, &weighting, value, opts.support_threshold).expect("dimensions match");
    let certified = report.residual <= opts.kkt_tol && report.outside_excess <= opts.kkt_tol;
    LagrangianResult {
        value,
        support: report.support.len(),
        weighting,
        kkt_residual: report.residual,
        method,
        certified,
    }
}

fn closed_form(g: &RGraph, opts: &SolverOptions) -> LagrangianResult {
    let clique = max_clique(g).expect("r = 2 and n within limit");
    let mut x = vec![0.0; g.n() as usize];
    for &v in &clique {
        x[v as usize - 1] = 1.0 / clique.len() as f64;
    }
    let poly = Multilinear::new(g);
    package(g, &poly, x, Method::ClosedForm2graph, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(g: &RGraph) -> LagrangianResult {
        lagrangian(g, &SolverOptions::default())
    }

    #[test]
    fn complete_3graphs() {
        for (t, expect) in [(4u32, 0.0625), (5, 0.08), (6, 20.0 / 216.0)] {
            let res = solve(&RGraph::complete(3, t));
            assert!((res.value - expect).abs() < 1e-12, "t={t}: {}", res.value);
            assert!(res.certified);
            assert_eq!(res.support, t as usize);
        }
    }

    #[test]
    fn triangle_2graph() {
        let res = solve(&RGraph::complete(2, 3));
        assert!((res.value - 1.0 / 3.0).abs() < 1e-12);
        assert!(res.certified);
    }

    #[test]
    fn empty_graph() {
        let res = solve(&RGraph::empty(3, 4));
        assert_eq!(res.value, 0.0);
        assert_eq!(res.support, 0);
        assert_eq!(res.weighting, Weighting::uniform(4));
    }

    #[test]
    fn star_gets_minimal_support() {
        let g = RGraph::from_lists(2, 3, &[&[1, 2], &[1, 3]]);
        let res = solve(&g);
        assert!((res.value - 0.25).abs() < 1e-12);
        assert_eq!(res.support, 2);
        assert!(res.certified);
        assert_eq!(res.weighting.as_slice()[2], 0.0);
    }

    #[test]
    fn closed_form_method() {
        let opts = SolverOptions {
            closed_form_2graph: true,
            ..SolverOptions::default()
        };
        let res = lagrangian(&RGraph::complete(2, 4), &opts);
        assert_eq!(res.method, Method::ClosedForm2graph);
        assert!((res.value - 0.375).abs() < 1e-15);
    }

    #[test]
    fn isolated_vertices_get_zero_weight() {
        let g = RGraph::from_lists(3, 6, &[&[1, 2, 3]]);
        let res = solve(&g);
        assert!((res.value - 1.0 / 27.0).abs() < 1e-14);
        assert_eq!(&res.weighting.as_slice()[3..], &[0.0, 0.0, 0.0]);
    }
}
