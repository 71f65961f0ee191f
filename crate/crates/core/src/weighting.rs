use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `Σ x_i = 1` for a legal weighting.
pub const SUM_TOL: f64 = 1e-12;

/// A point of the standard simplex; `x[v - 1]` is the weight of vertex `v`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weighting(Vec<f64>);

impl Weighting {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if let Some(bad) = x.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidWeighting(format!("entry {bad} is negative or not finite")));
        }
        let sum: f64 = x.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidWeighting(format!("entries sum to {sum}, not 1")));
        }
        Ok(Weighting(x))
    }

    /// Clamp negatives to zero and rescale to unit sum. Falls back to uniform
    /// when nothing positive remains.
    pub fn normalized(mut x: Vec<f64>) -> Self {
        for v in x.iter_mut() {
            if !v.is_finite() || *v < 0.0 {
                *v = 0.0;
            }
        }
        let sum: f64 = x.iter().sum();
        if sum <= 0.0 {
            return Weighting::uniform(x.len());
        }
        x.iter_mut().for_each(|v| *v /= sum);
        Weighting(x)
    }

    pub fn uniform(n: usize) -> Self {
        Weighting(vec![1.0 / n.max(1) as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based vertices whose weight exceeds `threshold`.
    pub fn support(&self, threshold: f64) -> Vec<u32> {
        (0..self.0.len())
            .filter(|&i| self.0[i] > threshold)
            .map(|i| i as u32 + 1)
            .collect()
    }

    pub fn weight(&self, v: u32) -> f64 {
        self.0[v as usize - 1]
    }
}
