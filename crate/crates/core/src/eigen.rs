//! Dense symmetric eigensolver (cyclic Jacobi).
//!
//! Rotations are applied in a fixed `(p, q)` order, so results are
//! bitwise-reproducible for a given input.

use crate::error::{Error, Result};

/// Sweep cap; Jacobi converges quadratically, so well under 20 sweeps is typical.
pub const MAX_SWEEPS: usize = 64;

/// Stop when the off-diagonal Frobenius norm falls below this fraction of the full norm.
const REL_OFF_TOL: f64 = 1e-15;

#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Row-major `n x n`; column `j` is the unit eigenvector for `values[j]`.
    pub vectors: Option<Vec<f64>>,
    pub sweeps: usize,
}

impl SymmetricEigen {
    pub fn vector(&self, j: usize) -> Option<Vec<f64>> {
        let v = self.vectors.as_ref()?;
        let n = self.values.len();
        Some((0..n).map(|i| v[i * n + j]).collect())
    }
}

/// Full eigendecomposition of the symmetric row-major `n x n` matrix `a`.
pub fn symmetric_eigen(a: &[f64], n: usize) -> Result<SymmetricEigen> {
    jacobi(a, n, true)
}

/// Eigenvalues only; skips accumulating rotations.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Result<Vec<f64>> {
    Ok(jacobi(a, n, false)?.values)
}

fn off_norm_sq(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    2.0 * s
}

fn jacobi(input: &[f64], n: usize, want_vectors: bool) -> Result<SymmetricEigen> {
    assert_eq!(input.len(), n * n, "matrix must be {n}x{n}");
    let mut a = input.to_vec();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    let total: f64 = a.iter().map(|x| x * x).sum();
    let target = (REL_OFF_TOL * REL_OFF_TOL) * total;

    let mut sweeps = 0;
    loop {
        let off = off_norm_sq(&a, n);
        if off <= target || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off.sqrt(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.is_finite() {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                } else {
                    // |theta| overflowed: the rotation is negligible but still zeroes apq.
                    0.5 / theta
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let kp = c * akp - s * akq;
                    let kq = s * akp + c * akq;
                    a[k * n + p] = kp;
                    a[p * n + k] = kp;
                    a[k * n + q] = kq;
                    a[q * n + k] = kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let diag: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps index order on exact ties.
    order.sort_by(|&x, &y| diag[y].total_cmp(&diag[x]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = v.map(|v| {
        let mut out = vec![0.0; n * n];
        for (new, &old) in order.iter().enumerate() {
            for k in 0..n {
                out[k * n + new] = v[k * n + old];
            }
        }
        out
    });
    Ok(SymmetricEigen {
        values,
        vectors,
        sweeps,
    })
}
