//! Projected gradient ascent and stationary-point Newton refinement, both
//! working over "class weights": vertices in one class share a weight.

use super::linalg::{project_simplex, solve};
use super::poly::Multilinear;

/// `λ` restricted to weightings constant on each class. `w[c]` is the total
/// weight of class `c`, so every vertex of `c` gets `w[c] / |c|`.
pub(crate) struct Reduced<'a> {
    poly: &'a Multilinear,
    classes: Vec<Vec<usize>>,
}

impl<'a> Reduced<'a> {
    pub fn new(poly: &'a Multilinear, classes: Vec<Vec<usize>>) -> Self {
        Reduced { poly, classes }
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn expand(&self, w: &[f64]) -> Vec<f64> {
        let mut x = vec![0.0; self.poly.n];
        for (c, class) in self.classes.iter().enumerate() {
            let share = w[c] / class.len() as f64;
            for &v in class {
                x[v] = share;
            }
        }
        x
    }

    pub fn value(&self, w: &[f64]) -> f64 {
        self.poly.value(&self.expand(w))
    }

    pub fn gradient(&self, w: &[f64]) -> Vec<f64> {
        let x = self.expand(w);
        let mut gx = vec![0.0; self.poly.n];
        self.poly.gradient(&x, &mut gx);
        self.classes
            .iter()
            .map(|class| class.iter().map(|&v| gx[v]).sum::<f64>() / class.len() as f64)
            .collect()
    }

    pub fn hessian(&self, w: &[f64]) -> Vec<f64> {
        let x = self.expand(w);
        let hx = self.poly.hessian(&x);
        let hx = &hx;
        let (n, d) = (self.poly.n, self.dim());
        let mut h = vec![0.0; d * d];
        for (a, ca) in self.classes.iter().enumerate() {
            for (b, cb) in self.classes.iter().enumerate() {
                let s: f64 = ca
                    .iter()
                    .flat_map(|&u| cb.iter().map(move |&v| hx[u * n + v]))
                    .sum();
                h[a * d + b] = s / (ca.len() * cb.len()) as f64;
            }
        }
        h
    }
}

pub(crate) struct AscentParams {
    pub max_iterations: usize,
    pub step_tol: f64,
    pub value_tol: f64,
}

/// Projected gradient ascent with Armijo backtracking. Returns the final class
/// weights, their value and the iteration count.
pub(crate) fn ascend(red: &Reduced, start: Vec<f64>, p: &AscentParams) -> (Vec<f64>, f64, usize) {
    let mut w = project_simplex(&start);
    let mut f = red.value(&w);
    let mut step = 1.0f64;
    let mut iters = 0;
    while iters < p.max_iterations {
        iters += 1;
        let g = red.gradient(&w);
        let mut accepted = None;
        while step > 1e-20 {
            let trial: Vec<f64> = w.iter().zip(&g).map(|(a, b)| a + step * b).collect();
            let cand = project_simplex(&trial);
            let slope: f64 = cand.iter().zip(&w).zip(&g).map(|((c, a), b)| (c - a) * b).sum();
            let fc = red.value(&cand);
            if fc >= f + 1e-4 * slope {
                accepted = Some((cand, fc));
                break;
            }
            step *= 0.5;
        }
        let Some((cand, fc)) = accepted else { break };
        let moved = cand.iter().zip(&w).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        let gain = fc - f;
        w = cand;
        f = fc;
        if moved < p.step_tol || gain <= p.value_tol {
            break;
        }
        step = (step * 2.0).min(1e6);
    }
    (w, f, iters)
}

/// Newton's method on the equal-gradient system
/// `∂λ/∂w_c = μ (c ∈ support), Σ_{c ∈ support} w_c = 1`, damped so that
/// every supported weight stays positive. `None` if it fails to converge or
/// is pushed onto the boundary.
pub(crate) fn newton_on_support(red: &Reduced, start: &[f64], support: &[usize]) -> Option<Vec<f64>> {
    let d = red.dim();
    let k = support.len();
    if k == 0 {
        return None;
    }
    let mut w = vec![0.0; d];
    let total: f64 = support.iter().map(|&c| start[c].max(0.0)).sum();
    for &c in support {
        w[c] = if total > 0.0 {
            start[c].max(0.0) / total
        } else {
            1.0 / k as f64
        };
    }
    if support.iter().any(|&c| w[c] <= 0.0) {
        support.iter().for_each(|&c| w[c] = 1.0 / k as f64);
    }
    let g = red.gradient(&w);
    let mut mu: f64 = support.iter().map(|&c| w[c] * g[c]).sum();
    let residual = |w: &[f64], mu: f64| -> (Vec<f64>, f64) {
        let g = red.gradient(w);
        let mut f: Vec<f64> = support.iter().map(|&c| g[c] - mu).collect();
        f.push(support.iter().map(|&c| w[c]).sum::<f64>() - 1.0);
        let norm = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        (f, norm)
    };
    let (mut fvec, mut norm) = residual(&w, mu);
    for _ in 0..80 {
        if norm < 1e-15 {
            break;
        }
        let h = red.hessian(&w);
        let mut jac = vec![0.0; (k + 1) * (k + 1)];
        for (a, &ca) in support.iter().enumerate() {
            for (b, &cb) in support.iter().enumerate() {
                jac[a * (k + 1) + b] = h[ca * d + cb];
            }
            jac[a * (k + 1) + k] = -1.0;
            jac[k * (k + 1) + a] = 1.0;
        }
        let rhs: Vec<f64> = fvec.iter().map(|v| -v).collect();
        let delta = solve(jac, rhs)?;
        let mut alpha = 1.0;
        loop {
            let ok = support
                .iter()
                .enumerate()
                .all(|(a, &c)| w[c] + alpha * delta[a] > 0.0);
            if ok {
                let mut trial = w.clone();
                for (a, &c) in support.iter().enumerate() {
                    trial[c] += alpha * delta[a];
                }
                let tmu = mu + alpha * delta[k];
                let (tf, tn) = residual(&trial, tmu);
                if tn < norm || alpha < 1e-3 {
                    w = trial;
                    mu = tmu;
                    fvec = tf;
                    norm = tn;
                    break;
                }
            }
            alpha *= 0.5;
            if alpha < 1e-10 {
                return None;
            }
        }
    }
    (norm < 1e-12).then_some(w)
}

/// Constrained ascent inside the face spanned by `support`, starting from
/// the uniform weighting on it. Takes Newton steps when the Hessian is
/// negative definite along the step and projected-gradient steps otherwise;
/// gives up (`None`) when the ascent is driven onto the face's boundary.
pub(crate) fn face_ascent(red: &Reduced, support: &[usize], max_iterations: usize) -> Option<Vec<f64>> {
    let d = red.dim();
    let k = support.len();
    if k == 0 {
        return None;
    }
    let mut w = vec![0.0; d];
    support.iter().for_each(|&c| w[c] = 1.0 / k as f64);
    let mut f = red.value(&w);
    for _ in 0..max_iterations {
        let g = red.gradient(&w);
        let mean = support.iter().map(|&c| g[c]).sum::<f64>() / k as f64;
        let pg: Vec<f64> = support.iter().map(|&c| g[c] - mean).collect();
        let pg_norm = pg.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if pg_norm < 1e-15 {
            return Some(w);
        }
        let h = red.hessian(&w);
        let mut jac = vec![0.0; (k + 1) * (k + 1)];
        for (a, &ca) in support.iter().enumerate() {
            for (b, &cb) in support.iter().enumerate() {
                jac[a * (k + 1) + b] = h[ca * d + cb];
            }
            jac[a * (k + 1) + k] = -1.0;
            jac[k * (k + 1) + a] = 1.0;
        }
        let mut rhs: Vec<f64> = support.iter().map(|&c| -g[c]).collect();
        rhs.push(0.0);
        let newton = solve(jac, rhs).map(|mut s| {
            s.truncate(k);
            s
        });
        let dir = match newton {
            Some(step) => {
                let gain: f64 = step.iter().zip(&pg).map(|(a, b)| a * b).sum();
                let curv: f64 = support
                    .iter()
                    .enumerate()
                    .map(|(a, &ca)| {
                        step[a] * support.iter().enumerate().map(|(b, &cb)| h[ca * d + cb] * step[b]).sum::<f64>()
                    })
                    .sum();
                if gain > 0.0 && curv < 0.0 {
                    step
                } else {
                    pg.clone()
                }
            }
            None => pg.clone(),
        };
        let mut alpha = 1.0;
        let mut moved = false;
        while alpha > 1e-16 {
            let trial: Vec<f64> = support.iter().enumerate().map(|(a, &c)| w[c] + alpha * dir[a]).collect();
            if trial.iter().all(|&v| v > 0.0) {
                let mut cand = w.clone();
                support.iter().zip(&trial).for_each(|(&c, &v)| cand[c] = v);
                let fc = red.value(&cand);
                if fc > f {
                    w = cand;
                    f = fc;
                    moved = true;
                    break;
                }
            } else if alpha * dir.iter().fold(0.0f64, |m, v| m.max(v.abs())) < 1e-12 {
                return None;
            }
            alpha *= 0.5;
        }
        if !moved {
            // no representable improvement left
            return (pg_norm < 1e-10).then_some(w);
        }
        if support.iter().any(|&c| w[c] < 1e-13) {
            return None;
        }
    }
    None
}

/// Try Newton refinement on nested candidate supports (the heaviest classes,
/// dropping the lightest one at a time). Keeps the best refined point that is
/// also first-order optimal off its support.
pub(crate) fn polish(red: &Reduced, w: &[f64], floor: f64) -> Option<(Vec<f64>, f64)> {
    let mut order: Vec<usize> = (0..red.dim()).filter(|&c| w[c] > 0.0).collect();
    order.sort_by(|&a, &b| w[b].total_cmp(&w[a]).then(a.cmp(&b)));
    let mut best: Option<(Vec<f64>, f64)> = None;
    for k in (1..=order.len()).rev() {
        let mut support = order[..k].to_vec();
        support.sort_unstable();
        let Some(refined) = newton_on_support(red, w, &support) else {
            continue;
        };
        let val = red.value(&refined);
        let g = red.gradient(&refined);
        let mu: f64 = support.iter().map(|&c| refined[c] * g[c]).sum();
        let outside_ok = (0..red.dim())
            .filter(|c| !support.contains(c))
            .all(|c| g[c] <= mu + 1e-9);
        if outside_ok && val >= floor && best.as_ref().is_none_or(|(_, b)| val > *b) {
            best = Some((refined, val));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::RGraph;

    #[test]
    fn ascent_finds_complete_graph_optimum() {
        let g = RGraph::complete(3, 5);
        let poly = Multilinear::new(&g);
        let red = Reduced::new(&poly, (0..5).map(|v| vec![v]).collect());
        let p = AscentParams {
            max_iterations: 10_000,
            step_tol: 1e-14,
            value_tol: 1e-14,
        };
        let (w, f, _) = ascend(&red, vec![0.4, 0.3, 0.1, 0.1, 0.1], &p);
        assert!((f - 0.08).abs() < 1e-9, "{f}");
        let (wp, fp) = polish(&red, &w, f - 1e-12).unwrap();
        assert!((fp - 0.08).abs() < 1e-15);
        assert!(wp.iter().all(|v| (v - 0.2).abs() < 1e-12));
    }

    #[test]
    fn reduced_gradient_uses_class_average() {
        let g = RGraph::complete(3, 4);
        let poly = Multilinear::new(&g);
        let red = Reduced::new(&poly, vec![vec![0, 1, 2, 3]]);
        assert!((red.value(&[1.0]) - 0.0625).abs() < 1e-15);
        assert!((red.gradient(&[1.0])[0] - 0.1875).abs() < 1e-15);
    }
}
