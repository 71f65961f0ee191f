//! Edges as strictly increasing vertex tuples and the colex order on them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// An r-set of 1-based vertex labels stored in increasing order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Edge(Vec<u32>);

impl Edge {
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        let ok = !vertices.is_empty()
            && vertices[0] >= 1
            && vertices.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(Edge(vertices))
        } else {
            Err(Error::InvalidEdge(vertices))
        }
    }

    /// Builds an edge from any vertex list, sorting it first.
    pub fn from_unsorted(mut vertices: Vec<u32>) -> Result<Self> {
        vertices.sort_unstable();
        Edge::new(vertices)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_vertex(&self) -> u32 {
        *self.0.last().expect("edges are non-empty")
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    /// 0-based position of this set in the colex order of all sets of its size.
    pub fn colex_rank(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(s, &v)| binomial(v as u64 - 1, s as u64 + 1))
            .sum()
    }

    /// Inverse of [`Edge::colex_rank`].
    pub fn colex_unrank(r: usize, mut rank: u64) -> Edge {
        assert!(r >= 1, "uniformity must be positive");
        let mut out = vec![0u32; r];
        for s in (1..=r as u64).rev() {
            // largest c with C(c, s) <= rank; c >= s - 1 always works
            let mut c = s - 1;
            let mut step = 1u64;
            while binomial(c + step, s) <= rank {
                c += step;
                step *= 2;
            }
            while step > 1 {
                step /= 2;
                if binomial(c + step, s) <= rank {
                    c += step;
                }
            }
            rank -= binomial(c, s);
            out[s as usize - 1] = (c + 1) as u32;
        }
        Edge(out)
    }

    /// Replace vertex `from` by `to`, keeping the result sorted. Returns `None`
    /// when `from` is absent or `to` is already present.
    pub fn replaced(&self, from: u32, to: u32) -> Option<Edge> {
        if !self.contains(from) || self.contains(to) || to == 0 {
            return None;
        }
        let mut v: Vec<u32> = self.0.iter().map(|&x| if x == from { to } else { x }).collect();
        v.sort_unstable();
        Some(Edge(v))
    }

    /// Componentwise comparison: every coordinate of `self` is at most the
    /// matching coordinate of `other`.
    pub fn dominated_by(&self, other: &Edge) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Edge{:?}", self.0)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Colex comparison: `A < B` iff the largest element of `A △ B` lies in `B`.
pub fn colex_compare(a: &Edge, b: &Edge) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::Uniformity {
            expected: a.len(),
            found: b.len(),
        });
    }
    // Equal-size sets: colex is lexicographic on the descending sequences.
    for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sets of different sizes are ordered by size first, then colex.
impl Ord for Edge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| colex_compare(self, other).expect("lengths already equal"))
    }
}
