//! The descendant poset on r-tuples and enumeration of its down-sets.
//!
//! `B` is a descendant of `A` when `B` is componentwise at most `A` and has a
//! strictly smaller coordinate sum; a direct descendant has sum exactly one
//! less. Left-compressed graphs on `[t]` are precisely the down-sets of this
//! poset restricted to `[t]^(r)`.

use crate::edge::{binomial, Edge};
use crate::error::{Error, Result};
use crate::graph::RGraph;

/// All strict descendants of `a`, in colex order.
pub fn descendants(a: &Edge) -> Vec<Edge> {
    let r = a.len();
    (0..binomial(a.max_vertex() as u64, r as u64))
        .map(|k| Edge::colex_unrank(r, k))
        .filter(|b| b != a && b.dominated_by(a))
        .collect()
}

/// Descendants whose coordinate sum is exactly one less than `a`'s.
pub fn direct_descendants(a: &Edge) -> Vec<Edge> {
    let mut out = Vec::new();
    let v = a.vertices();
    for s in 0..v.len() {
        let lower = if s == 0 { 0 } else { v[s - 1] };
        if v[s] - 1 > lower {
            let mut b = v.to_vec();
            b[s] -= 1;
            out.push(Edge::new(b).expect("still increasing"));
        }
    }
    out.sort();
    out
}

/// All strict ancestors of `a` inside `[t]`, in colex order.
pub fn ancestors(a: &Edge, t: u32) -> Vec<Edge> {
    let r = a.len();
    (0..binomial(t as u64, r as u64))
        .map(|k| Edge::colex_unrank(r, k))
        .filter(|b| b != a && a.dominated_by(b))
        .collect()
}

/// Down-set criterion: every descendant of every edge is an edge.
pub fn is_down_set(g: &RGraph) -> bool {
    g.edges()
        .iter()
        .all(|e| descendants(e).iter().all(|d| g.contains(d)))
}

/// Largest `t` whose triple poset fits in a single 64-bit word.
pub const MAX_ENUM_T: u32 = 8;

/// Lazily yields every left-compressed 3-graph on `[t]` with exactly `m`
/// edges, each once.
///
/// Triples are visited in colex order, which is a linear extension of the
/// descendant order, and a triple may only be added once all of its direct
/// descendants are present. Each yielded graph therefore corresponds to one
/// root-to-leaf path of include/exclude decisions.
#[derive(Clone, Debug)]
pub struct LeftCompressedEnumerator {
    t: u32,
    m: usize,
    total: usize,
    needs: Vec<u64>,
    stack: Vec<(usize, u64, usize)>,
}

impl LeftCompressedEnumerator {
    pub fn new(t: u32, m: usize) -> Result<Self> {
        if t > MAX_ENUM_T {
            return Err(Error::OutOfRange(format!(
                "enumeration supports t <= {MAX_ENUM_T}, got t = {t}"
            )));
        }
        let total = binomial(t as u64, 3) as usize;
        if m > total {
            return Err(Error::OutOfRange(format!(
                "m = {m} exceeds C({t},3) = {total}"
            )));
        }
        let needs = (0..total as u64)
            .map(|k| {
                direct_descendants(&Edge::colex_unrank(3, k))
                    .iter()
                    .fold(0u64, |acc, d| acc | 1 << d.colex_rank())
            })
            .collect();
        Ok(LeftCompressedEnumerator {
            t,
            m,
            total,
            needs,
            stack: vec![(0, 0, 0)],
        })
    }

    /// Next down-set as a rank bitmask.
    pub fn next_mask(&mut self) -> Option<u64> {
        while let Some((idx, mask, count)) = self.stack.pop() {
            if count == self.m {
                return Some(mask);
            }
            if idx == self.total || count + (self.total - idx) < self.m {
                continue;
            }
            self.stack.push((idx + 1, mask, count));
            if mask & self.needs[idx] == self.needs[idx] {
                self.stack.push((idx + 1, mask | 1 << idx, count + 1));
            }
        }
        None
    }

    pub fn graph_from_mask(t: u32, mask: u64) -> RGraph {
        let ranks = (0..64).filter(|b| mask >> b & 1 == 1);
        RGraph::from_ranks(3, t, ranks).expect("ranks lie inside [t]^(3)")
    }
}

impl Iterator for LeftCompressedEnumerator {
    type Item = RGraph;

    fn next(&mut self) -> Option<RGraph> {
        let t = self.t;
        self.next_mask().map(|mask| Self::graph_from_mask(t, mask))
    }
}

/// Stream of the left-compressed 3-graphs on `[t]` with `m` edges.
pub fn enumerate_left_compressed(t: u32, m: usize) -> Result<LeftCompressedEnumerator> {
    LeftCompressedEnumerator::new(t, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Edge {
        Edge::new(v.to_vec()).unwrap()
    }

    #[test]
    fn descendant_examples() {
        assert!(descendants(&e(&[1, 2, 3])).is_empty());
        assert_eq!(direct_descendants(&e(&[1, 2, 5])), vec![e(&[1, 2, 4])]);
        let up = ancestors(&e(&[4, 5, 7]), 7);
        assert!(!up.contains(&e(&[4, 5, 6])));
        assert!(up.contains(&e(&[5, 6, 7])));
        // brute force: triples in [7] componentwise above 457
        assert_eq!(up, vec![e(&[4, 6, 7]), e(&[5, 6, 7])]);
    }

    #[test]
    fn direct_descendants_have_sum_one_less() {
        for k in 0..binomial(8, 3) {
            let a = Edge::colex_unrank(3, k);
            let brute: Vec<Edge> = descendants(&a)
                .into_iter()
                .filter(|d| d.sum() + 1 == a.sum())
                .collect();
            assert_eq!(direct_descendants(&a), brute);
        }
    }

    #[test]
    fn enumeration_small_cells() {
        let all: Vec<RGraph> = enumerate_left_compressed(4, 4).unwrap().collect();
        assert_eq!(all, vec![RGraph::complete(3, 4)]);
        let one: Vec<RGraph> = enumerate_left_compressed(5, 1).unwrap().collect();
        assert_eq!(one, vec![RGraph::from_lists(3, 5, &[&[1, 2, 3]])]);
        assert_eq!(enumerate_left_compressed(5, 0).unwrap().count(), 1);
        assert!(enumerate_left_compressed(4, 5).is_err());
        assert!(enumerate_left_compressed(9, 5).is_err());
    }

    #[test]
    fn enumerated_graphs_are_distinct_down_sets() {
        for m in 0..=20 {
            let gs: Vec<RGraph> = enumerate_left_compressed(6, m).unwrap().collect();
            for g in &gs {
                assert_eq!(g.m(), m);
                assert!(g.is_left_compressed());
            }
            let mut hashes: Vec<_> = gs.iter().map(|g| g.bits().low_word()).collect();
            hashes.sort_unstable();
            hashes.dedup();
            assert_eq!(hashes.len(), gs.len());
        }
    }
}
