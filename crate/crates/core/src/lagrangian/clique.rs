//! Closed-form Lagrangian of a 2-graph via its clique number.

use crate::error::{Error, Result};
use crate::graph::RGraph;

/// Largest `n` accepted by the exhaustive clique search.
pub const MAX_CLIQUE_N: u32 = 20;

/// A maximum clique (1-based, increasing) by exhaustive branch-and-bound;
/// empty for a graph with no edges.
pub fn max_clique(g: &RGraph) -> Result<Vec<u32>> {
    if g.r() != 2 {
        return Err(Error::Unsupported(format!("clique search needs r = 2, got r = {}", g.r())));
    }
    if g.n() > MAX_CLIQUE_N {
        return Err(Error::Unsupported(format!(
            "exhaustive clique search limited to n <= {MAX_CLIQUE_N}, got n = {}",
            g.n()
        )));
    }
    if g.is_empty() {
        return Ok(Vec::new());
    }
    let n = g.n() as usize;
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        let (a, b) = (e.vertices()[0] as usize - 1, e.vertices()[1] as usize - 1);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    fn grow(adj: &[u32], clique: u32, candidates: u32, best: &mut u32) {
        let size = clique.count_ones();
        if candidates == 0 {
            if size > best.count_ones() {
                *best = clique;
            }
            return;
        }
        let mut rest = candidates;
        while rest != 0 {
            if size + rest.count_ones() <= best.count_ones() {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, clique | 1 << v, rest & adj[v], best);
        }
    }
    let mut best = 0u32;
    grow(&adj, 0, (1u32 << n) - 1, &mut best);
    Ok((0..n as u32).filter(|b| best >> b & 1 == 1).map(|b| b + 1).collect())
}

/// Clique number; 0 for a graph with no edges.
pub fn clique_number(g: &RGraph) -> Result<u32> {
    Ok(max_clique(g)?.len() as u32)
}

/// `λ(G) = ½(1 − 1/ω)` where `ω` is the clique number; 0 without edges.
pub fn lagrangian_2graph_oracle(g: &RGraph) -> Result<f64> {
    let omega = clique_number(g)?;
    if omega < 2 {
        return Ok(0.0);
    }
    Ok(0.5 * (1.0 - 1.0 / omega as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> RGraph {
        let lists: Vec<Vec<u32>> = (1..=n).map(|i| vec![i, i % n + 1]).collect();
        let refs: Vec<&[u32]> = lists.iter().map(|l| l.as_slice()).collect();
        RGraph::from_lists(2, n, &refs)
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(clique_number(&cycle(5)).unwrap(), 2);
        assert!((lagrangian_2graph_oracle(&cycle(5)).unwrap() - 0.25).abs() < 1e-15);
        assert!((lagrangian_2graph_oracle(&RGraph::complete(2, 4)).unwrap() - 0.375).abs() < 1e-15);
        assert_eq!(lagrangian_2graph_oracle(&RGraph::empty(2, 5)).unwrap(), 0.0);
        assert_eq!(clique_number(&RGraph::complete(2, 20)).unwrap(), 20);
    }

    #[test]
    fn refusals() {
        assert!(clique_number(&RGraph::complete(3, 4)).is_err());
        assert!(clique_number(&RGraph::empty(2, 21)).is_err());
    }
}
