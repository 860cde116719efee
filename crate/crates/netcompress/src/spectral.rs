//! Laplacian spectrum, scaling-law fits, and cross-generator distance gaps.
//!
//! The Fiedler value (algebraic connectivity) is the second-smallest
//! eigenvalue of the graph Laplacian `L = D - A`. It is positive exactly when
//! the graph is connected, and grows as the graph tightens, which makes it a
//! convenient proxy for synchronizability and diffusion rate. Eigenvalues are
//! obtained with a cyclic Jacobi sweep over the dense symmetric matrix; at
//! the few-hundred-node scale this crate targets, Jacobi is simple, robust,
//! and portable.

use thiserror::Error;

use crate::generators::{ba_network, ws_network, GeneratorError};
use crate::graph::Graph;

/// Dense symmetric Laplacian `L = D - A`, row-major.
#[derive(Debug, Clone)]
pub struct LaplacianMatrix {
    n: usize,
    data: Vec<f64>,
}

impl LaplacianMatrix {
    pub fn from_graph(g: &Graph) -> LaplacianMatrix {
        let n = g.node_count();
        let mut data = vec![0.0; n * n];
        for v in g.nodes() {
            data[v.index() * n + v.index()] = g.degree(v) as f64;
            for w in g.neighbors(v) {
                data[v.index() * n + w.index()] = -1.0;
            }
        }
        LaplacianMatrix { n, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Applies `L` to a vector (used for residual checks).
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

/// Eigen-decomposition of a symmetric matrix: ascending eigenvalues and the
/// matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

const JACOBI_TOL: f64 = 1e-10;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization of a symmetric matrix (row-major, `n * n`).
///
/// Rotations are applied in sweeps over all upper-triangle positions until
/// every off-diagonal magnitude falls below an absolute `1e-10`.
pub fn symmetric_eigen(n: usize, matrix: &[f64]) -> SymmetricEigen {
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let idx = |r: usize, c: usize| r * n + c;

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[idx(p, q)].abs());
            }
        }
        if off < JACOBI_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq.abs() < JACOBI_TOL / (n as f64) {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[idx(k, p)];
                    let vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - s * vkq;
                    v[idx(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[idx(i, i)]
            .partial_cmp(&a[idx(j, j)])
            .expect("eigenvalues are finite")
    });
    let values = order.iter().map(|&i| a[idx(i, i)]).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v[idx(row, col)]).collect())
        .collect();
    SymmetricEigen { values, vectors }
}

/// Second-smallest Laplacian eigenvalue of `g`.
///
/// Positive for connected graphs; for disconnected graphs the zero eigenvalue
/// has multiplicity above one and the result is exactly `0.0` (solver noise
/// below `1e-9` is clamped). Requires at least two nodes.
pub fn fiedler_value(g: &Graph) -> f64 {
    assert!(g.node_count() >= 2, "fiedler value needs at least 2 nodes");
    let lap = LaplacianMatrix::from_graph(g);
    let eigen = symmetric_eigen(lap.size(), &lap.data);
    let lambda2 = eigen.values[1];
    if lambda2.abs() < 1e-9 {
        0.0
    } else {
        lambda2
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("DegenerateFit: {0}")]
    DegenerateFit(String),
}

fn ols(ts: &[f64], ys: &[f64]) -> Result<FitResult, FitError> {
    if ts.len() != ys.len() || ts.len() < 3 {
        return Err(FitError::DegenerateFit(format!(
            "need at least 3 points, got {}",
            ts.len().min(ys.len())
        )));
    }
    let n = ts.len() as f64;
    let mean_t = ts.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let var_t: f64 = ts.iter().map(|t| (t - mean_t).powi(2)).sum();
    if var_t < 1e-30 {
        return Err(FitError::DegenerateFit("all x values coincide".into()));
    }
    let cov: f64 = ts
        .iter()
        .zip(ys)
        .map(|(t, y)| (t - mean_t) * (y - mean_y))
        .sum();
    let slope = cov / var_t;
    let intercept = mean_y - slope * mean_t;
    let ss_res: f64 = ts
        .iter()
        .zip(ys)
        .map(|(t, y)| (y - (slope * t + intercept)).powi(2))
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    let r_squared = if ss_tot < 1e-30 {
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };
    Ok(FitResult {
        slope,
        intercept,
        r_squared,
    })
}

/// Least squares of `ys` against `ln(xs)`.
pub fn fit_log(xs: &[f64], ys: &[f64]) -> Result<FitResult, FitError> {
    if xs.iter().any(|&x| x <= 0.0) {
        return Err(FitError::DegenerateFit("ln(x) needs x > 0".into()));
    }
    let ts: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    ols(&ts, ys)
}

/// Least squares of `ys` against `ln(ln(xs))`; requires every `x > e`.
pub fn fit_loglog(xs: &[f64], ys: &[f64]) -> Result<FitResult, FitError> {
    if xs.iter().any(|&x| x.ln() <= 0.0) {
        return Err(FitError::DegenerateFit("ln(ln(x)) needs x > 1".into()));
    }
    let ts: Vec<f64> = xs.iter().map(|x| x.ln().ln()).collect();
    ols(&ts, ys)
}

/// Mean average-distance gap between same-sized Watts–Strogatz
/// (`k = 4, p = 0.5`) and Barabási–Albert (`m = 4`) samples:
/// `mean D(ws) - mean D(ba)` over the given seeds. Positive whenever the
/// scale-free samples are the tighter ones, which is the expected regime.
pub fn ultra_small_world_gap(n: usize, seeds: &[u64]) -> Result<f64, GeneratorError> {
    assert!(n >= 50, "gap comparison is meaningless for tiny graphs");
    let mut ws_sum = 0.0;
    let mut ba_sum = 0.0;
    for &seed in seeds {
        ws_sum += ws_network(n, 4, 0.5, seed)?
            .average_distance()
            .expect("generator output is connected");
        ba_sum += ba_network(n, 4, seed)?
            .average_distance()
            .expect("generator output is connected");
    }
    let count = seeds.len() as f64;
    Ok(ws_sum / count - ba_sum / count)
}
