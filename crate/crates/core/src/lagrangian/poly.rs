//! The edge polynomial `λ(G, x) = Σ_{e ∈ E} Π_{v ∈ e} x_v` and its derivatives.

use crate::error::{Error, Result};
use crate::graph::{RGraph, VertexSet};
use crate::weighting::Weighting;

/// Flat, 0-based copy of a graph's edges for tight evaluation loops.
#[derive(Clone, Debug)]
pub(crate) struct Multilinear {
    pub n: usize,
    pub r: usize,
    pub flat: Vec<usize>,
}

impl Multilinear {
    pub fn new(g: &RGraph) -> Self {
        let flat = g
            .edges()
            .iter()
            .flat_map(|e| e.vertices().iter().map(|&v| v as usize - 1))
            .collect();
        Multilinear {
            n: g.n() as usize,
            r: g.r(),
            flat,
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = &[usize]> {
        self.flat.chunks_exact(self.r)
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.edges().map(|e| e.iter().map(|&v| x[v]).product::<f64>()).sum()
    }

    /// `out[v] = λ(E_v, x)`, the partial derivative in `x_v`.
    pub fn gradient(&self, x: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|g| *g = 0.0);
        for e in self.edges() {
            for p in 0..self.r {
                let mut prod = 1.0;
                for (q, &v) in e.iter().enumerate() {
                    if q != p {
                        prod *= x[v];
                    }
                }
                out[e[p]] += prod;
            }
        }
    }

    /// Row-major `n × n` Hessian; entry `(u, v)` is `λ(E_uv, x)`.
    pub fn hessian(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut h = vec![0.0; n * n];
        for e in self.edges() {
            for p in 0..self.r {
                for q in p + 1..self.r {
                    let mut prod = 1.0;
                    for (s, &v) in e.iter().enumerate() {
                        if s != p && s != q {
                            prod *= x[v];
                        }
                    }
                    h[e[p] * n + e[q]] += prod;
                    h[e[q] * n + e[p]] += prod;
                }
            }
        }
        h
    }
}

fn check_dim(g: &RGraph, x: &Weighting) -> Result<()> {
    if x.len() < g.n() as usize {
        Err(Error::Dimension {
            len: x.len(),
            n: g.n() as usize,
        })
    } else {
        Ok(())
    }
}

/// `λ(G, x)`.
pub fn evaluate(g: &RGraph, x: &Weighting) -> Result<f64> {
    check_dim(g, x)?;
    Ok(Multilinear::new(g).value(x.as_slice()))
}

/// `λ(E_i, x)`, equal to `∂λ(G, x)/∂x_i`.
pub fn link_value(g: &RGraph, i: u32, x: &Weighting) -> Result<f64> {
    check_dim(g, x)?;
    Ok(family_value(&g.link(i)?, x.as_slice()))
}

/// `Σ_{A ∈ family} Π_{v ∈ A} x_v` for a family of vertex sets (1-based).
pub fn family_value(family: &[VertexSet], x: &[f64]) -> f64 {
    family
        .iter()
        .map(|a| a.iter().map(|&v| x[v as usize - 1]).product::<f64>())
        .sum()
}
