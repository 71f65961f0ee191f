//! Shared inputs for the criterion benchmarks in `benches/`.

use laglab_core::{binomial, Edge, RGraph};

/// Named graphs covering the solver's main paths: symmetric, colex-initial,
/// and an irregular graph with no symmetry to exploit.
pub fn solver_inputs() -> Vec<(&'static str, RGraph)> {
    vec![
        ("complete_t6", RGraph::complete(3, 6)),
        ("colex_m17", RGraph::colex(3, 17)),
        ("colex_m50", RGraph::colex(3, 50)),
        ("irregular_n8", irregular(8)),
    ]
}

/// Triples of `[n]` whose colex rank is 0 or 1 mod 3, a fixed graph that is
/// not left-compressed.
pub fn irregular(n: u32) -> RGraph {
    let edges = (0..binomial(n as u64, 3))
        .filter(|k| k % 3 != 2)
        .map(|k| Edge::colex_unrank(3, k));
    RGraph::new(3, n, edges).expect("triples inside [n]")
}
