//! Uniform hypergraphs on `[n]`, their links, complements and left-compression.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::bits::RankBits;
use crate::edge::{binomial, Edge};
use crate::error::{Error, Result};

/// An (r−k)-set appearing in a link; may be empty when k = r.
pub type VertexSet = Vec<u32>;

/// An r-uniform hypergraph on the vertex set `[n]`.
///
/// Edges are kept sorted by colex rank alongside a rank bitmap, so membership
/// tests are O(1) and iteration order is canonical.
#[derive(Clone, Debug)]
pub struct RGraph {
    r: usize,
    n: u32,
    edges: Vec<Edge>,
    bits: RankBits,
}

impl PartialEq for RGraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for RGraph {}

impl RGraph {
    pub fn new(r: usize, n: u32, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if r < 2 {
            return Err(Error::Unsupported(format!("uniformity r = {r} (need r >= 2)")));
        }
        let mut list: Vec<Edge> = Vec::new();
        for e in edges {
            if e.len() != r {
                return Err(Error::Uniformity {
                    expected: r,
                    found: e.len(),
                });
            }
            if e.max_vertex() > n {
                return Err(Error::VertexBound {
                    edge: e.vertices().to_vec(),
                    n,
                });
            }
            list.push(e);
        }
        list.sort();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].vertices().to_vec()));
        }
        Ok(Self::from_sorted(r, n, list))
    }

    /// Convenience constructor from vertex lists; panics on invalid input.
    pub fn from_lists(r: usize, n: u32, lists: &[&[u32]]) -> Self {
        let edges = lists.iter().map(|l| Edge::from_unsorted(l.to_vec()).expect("valid edge"));
        RGraph::new(r, n, edges).expect("valid graph")
    }

    fn from_sorted(r: usize, n: u32, edges: Vec<Edge>) -> Self {
        let mut bits = RankBits::with_capacity(binomial(n as u64, r as u64) as usize);
        for e in &edges {
            bits.set(e.colex_rank());
        }
        RGraph { r, n, edges, bits }
    }

    /// Graph whose edges are the r-sets with the given colex ranks.
    pub fn from_ranks(r: usize, n: u32, ranks: impl IntoIterator<Item = u64>) -> Result<Self> {
        RGraph::new(r, n, ranks.into_iter().map(|k| Edge::colex_unrank(r, k)))
    }

    pub fn empty(r: usize, n: u32) -> Self {
        RGraph::new(r, n, []).expect("empty graph is valid")
    }

    /// `[t]^(r)`.
    pub fn complete(r: usize, t: u32) -> Self {
        let total = binomial(t as u64, r as u64);
        Self::from_sorted(r, t, (0..total).map(|k| Edge::colex_unrank(r, k)).collect())
    }

    /// The first `m` r-sets in colex order, on `n` = largest vertex used.
    pub fn colex(r: usize, m: u64) -> Self {
        let edges: Vec<Edge> = (0..m).map(|k| Edge::colex_unrank(r, k)).collect();
        let n = edges.last().map_or(0, Edge::max_vertex);
        Self::from_sorted(r, n, edges)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in colex order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn bits(&self) -> &RankBits {
        &self.bits
    }

    pub fn ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        e.len() == self.r && self.bits.get(e.colex_rank())
    }

    /// Same edges, different vertex bound.
    pub fn with_n(&self, n: u32) -> Result<Self> {
        RGraph::new(self.r, n, self.edges.iter().cloned())
    }

    /// Sub-graph relation on edge sets (uniformities must match).
    pub fn is_subgraph_of(&self, other: &RGraph) -> bool {
        self.r == other.r && self.edges.iter().all(|e| other.contains(e))
    }

    pub fn complement(&self) -> RGraph {
        let total = binomial(self.n as u64, self.r as u64);
        let edges = (0..total)
            .filter(|&k| !self.bits.get(k))
            .map(|k| Edge::colex_unrank(self.r, k))
            .collect();
        Self::from_sorted(self.r, self.n, edges)
    }

    /// Size of `E(self) △ E(other)`.
    pub fn symmetric_difference_size(&self, other: &RGraph) -> usize {
        let only_self = self.edges.iter().filter(|e| !other.contains(e)).count();
        let only_other = other.edges.iter().filter(|e| !self.contains(e)).count();
        only_self + only_other
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `E_i`: the (r−1)-sets completing to an edge with `i`.
    pub fn link(&self, i: u32) -> Result<Vec<VertexSet>> {
        self.check_vertex(i)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(i))
            .map(|e| without(e.vertices(), &[i]))
            .collect())
    }

    /// `E_ij`: the (r−2)-sets completing to an edge with both `i` and `j`.
    pub fn pair_link(&self, i: u32, j: u32) -> Result<Vec<VertexSet>> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Ok(Vec::new());
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(i) && e.contains(j))
            .map(|e| without(e.vertices(), &[i, j]))
            .collect())
    }

    /// `E_{i\j} = E_i ∩ E_j^c`: sets `A` avoiding `j` with `A ∪ {i}` an edge but
    /// `A ∪ {j}` not.
    pub fn difference_link(&self, i: u32, j: u32) -> Result<Vec<VertexSet>> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Ok(Vec::new());
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(i) && !e.contains(j))
            .filter(|e| !self.contains(&e.replaced(i, j).expect("i in e, j not in e")))
            .map(|e| without(e.vertices(), &[i]))
            .collect())
    }

    /// Whether `E_{j\i}` is empty for every `i < j`.
    pub fn is_left_compressed(&self) -> bool {
        self.edges.iter().all(|e| {
            e.vertices().iter().all(|&j| {
                (1..j)
                    .filter(|&i| !e.contains(i))
                    .all(|i| self.contains(&e.replaced(j, i).expect("j in e")))
            })
        })
    }

    /// One `(i, j)`-shift: every edge containing `j` but not `i` has `j`
    /// replaced by `i`, unless the image is already an edge.
    pub fn shift(&self, i: u32, j: u32) -> RGraph {
        let moved: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| match e.replaced(j, i) {
                Some(img) if !self.contains(&img) => img,
                _ => e.clone(),
            })
            .collect();
        let mut moved = moved;
        moved.sort();
        Self::from_sorted(self.r, self.n, moved)
    }

    /// Left-compress by applying `(i, j)`-shifts, `i < j` in lexicographic
    /// order, until nothing moves.
    pub fn compress(&self) -> RGraph {
        let mut g = self.clone();
        loop {
            let mut changed = false;
            for i in 1..=self.n {
                for j in i + 1..=self.n {
                    let s = g.shift(i, j);
                    if s != g {
                        changed = true;
                        g = s;
                    }
                }
            }
            if !changed {
                return g;
            }
        }
    }

    /// Relabel vertex `v` as `perm[v - 1]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<RGraph> {
        if perm.len() != self.n as usize {
            return Err(Error::Dimension {
                len: perm.len(),
                n: self.n as usize,
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::from_unsorted(e.vertices().iter().map(|&v| perm[v as usize - 1]).collect()))
            .collect::<Result<Vec<_>>>()?;
        RGraph::new(self.r, self.n, edges)
    }

    /// Vertices with no incident edge.
    pub fn isolated_vertices(&self) -> Vec<u32> {
        let mut seen = vec![false; self.n as usize + 1];
        for e in &self.edges {
            for &v in e.vertices() {
                seen[v as usize] = true;
            }
        }
        (1..=self.n).filter(|&v| !seen[v as usize]).collect()
    }

    /// Stable 64-bit fingerprint of `(r, n, edge set)`; independent of the
    /// standard library's hasher so seeds derived from it never drift.
    pub fn canonical_hash(&self) -> u64 {
        let mut h = 0xcbf2_9ce4_8422_2325u64;
        let mut feed = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        feed(self.r as u64);
        feed(self.n as u64);
        for k in self.bits.iter() {
            feed(k);
        }
        h
    }

    /// Canonical edge-list text: header `r n m`, then one edge per line in colex order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {} {}\n", self.r, self.n, self.m());
        for e in &self.edges {
            writeln!(out, "{e}").expect("writing to a String");
        }
        out
    }

    /// Parse the edge-list text format. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<RGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing header `r n m`".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        if nums.len() != 3 {
            return Err(Error::Parse {
                line: hline,
                column: 1,
                message: format!("header needs 3 integers `r n m`, found {}", nums.len()),
            });
        }
        let (r, n, m) = (nums[0] as usize, nums[1], nums[2] as usize);
        if r < 2 {
            return Err(Error::Parse {
                line: hline,
                column: 1,
                message: format!("uniformity r = {r} must be at least 2"),
            });
        }
        let mut edges = Vec::with_capacity(m);
        let mut seen = BTreeSet::new();
        for (ln, line) in lines {
            let verts = parse_numbers(ln, line)?;
            let err = |message: String| Error::Parse {
                line: ln,
                column: 1,
                message,
            };
            if verts.len() != r {
                return Err(err(format!("edge has {} vertices, expected {r}", verts.len())));
            }
            let e = Edge::new(verts.clone())
                .map_err(|_| err(format!("vertices {verts:?} must be positive and strictly increasing")))?;
            if e.max_vertex() > n {
                return Err(err(format!("vertex {} exceeds n = {n}", e.max_vertex())));
            }
            if !seen.insert(e.clone()) {
                return Err(err(format!("duplicate edge {e}")));
            }
            edges.push(e);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                column: 1,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        RGraph::new(r, n, edges)
    }
}

fn without(vs: &[u32], drop: &[u32]) -> VertexSet {
    vs.iter().copied().filter(|v| !drop.contains(v)).collect()
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut col = 0;
    for tok in line.split_whitespace() {
        let start = line[col..].find(tok).map_or(col, |p| p + col);
        col = start + tok.len();
        let v = tok.parse::<u32>().map_err(|_| Error::Parse {
            line: line_no,
            column: start + 1,
            message: format!("expected a non-negative integer, found `{tok}`"),
        })?;
        out.push(v);
    }
    Ok(out)
}
