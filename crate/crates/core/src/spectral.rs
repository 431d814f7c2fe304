//! Spectral decomposition of the kernel operator of a step graphon.
//!
//! On a partition with weights `w`, the operator `T_W` maps block-constant
//! functions to block-constant functions via the matrix `B D` where `B` is the
//! value matrix and `D = diag(w)`. It is self-adjoint for the weighted inner
//! product `<f, g> = Σ_i w_i f_i g_i`, and its nonzero spectrum is the nonzero
//! spectrum of `T_W` on all of `L²[0,1]`.

use serde::{Deserialize, Serialize};

use crate::cospectral;
use crate::eigen::symmetric_eigen;
use crate::error::{Error, Result};
use crate::graphon::{common_refinement, StepGraphon};

pub const DEFAULT_ZERO_TOL: f64 = 1e-12;
pub const DEFAULT_GROUP_TOL: f64 = 1e-8;
pub const DEFAULT_MATCH_TOL: f64 = 1e-8;

/// Multiset of nonzero eigenvalues, clustered into groups of (numerically) equal values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    /// Descending, each with `|λ| > zero_tol`.
    pub eigenvalues: Vec<f64>,
    /// `(representative, multiplicity)` in descending order of value.
    pub groups: Vec<(f64, usize)>,
    pub zero_tol: f64,
    pub group_tol: f64,
}

fn check_tolerances(zero_tol: f64, group_tol: f64) -> Result<()> {
    if !(zero_tol > 0.0 && group_tol > 0.0 && zero_tol < group_tol) {
        return Err(Error::InvalidArgument(format!(
            "tolerances must satisfy 0 < zero_tol < group_tol (got {zero_tol:e}, {group_tol:e})"
        )));
    }
    Ok(())
}

/// Single-linkage clustering of a descending sequence: neighbours within `tol`
/// share a cluster. Returns index ranges into `sorted`.
pub(crate) fn cluster_sorted(sorted: &[f64], tol: f64) -> Result<Vec<std::ops::Range<usize>>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || (sorted[i - 1] - sorted[i]).abs() > tol {
            let span = (sorted[start] - sorted[i - 1]).abs();
            if span > tol {
                return Err(Error::AmbiguousGrouping {
                    span,
                    group_tol: tol,
                });
            }
            if i > start {
                out.push(start..i);
            }
            start = i;
        }
    }
    Ok(out)
}

impl Spectrum {
    /// Drops `|λ| <= zero_tol`, sorts descending and groups within `group_tol`.
    pub fn from_eigenvalues(mut values: Vec<f64>, zero_tol: f64, group_tol: f64) -> Result<Self> {
        check_tolerances(zero_tol, group_tol)?;
        values.retain(|l| l.abs() > zero_tol);
        values.sort_by(|a, b| b.total_cmp(a));
        let groups = cluster_sorted(&values, group_tol)?
            .into_iter()
            .map(|r| {
                let len = r.len();
                let mean = values[r].iter().sum::<f64>() / len as f64;
                (mean, len)
            })
            .collect();
        Ok(Self {
            eigenvalues: values,
            groups,
            zero_tol,
            group_tol,
        })
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `Σ λ^k` over the stored eigenvalues.
    pub fn power_sum(&self, k: u32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k as i32)).sum()
    }
}

/// Multiset equality up to `match_tol`.
///
/// Both lists are sorted, so pairing the `i`-th largest with the `i`-th
/// largest is the greedy one-to-one matching; it succeeds iff any matching does.
pub fn spectra_equal(a: &Spectrum, b: &Spectrum, match_tol: f64) -> bool {
    a.eigenvalues.len() == b.eigenvalues.len()
        && a
            .eigenvalues
            .iter()
            .zip(&b.eigenvalues)
            .all(|(x, y)| (x - y).abs() <= match_tol)
}

#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub spectrum: Spectrum,
    /// One block-constant eigenfunction per stored eigenvalue (same order),
    /// orthonormal for the weighted inner product.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Eigenvalues with `|λ| <= zero_tol`, treated as exact zeros.
    pub dropped: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Weighted inner product `Σ_i w_i f_i g_i`.
pub fn weighted_inner(weights: &[f64], f: &[f64], g: &[f64]) -> f64 {
    weights
        .iter()
        .zip(f)
        .zip(g)
        .map(|((w, a), b)| w * a * b)
        .sum()
}

/// Flips `v` so that its first non-negligible coordinate is positive.
fn fix_sign(v: &mut [f64]) {
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-8 * scale) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

impl SpectralDecomposition {
    /// `Σ_λ λ <f_λ, f> f_λ`.
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; f.len()];
        for (lambda, v) in self.spectrum.eigenvalues.iter().zip(&self.eigenvectors) {
            let c = lambda * weighted_inner(&self.weights, v, f);
            out.iter_mut().zip(v).for_each(|(o, x)| *o += c * x);
        }
        out
    }

    /// `Σ_λ λ f_λ f_λᵀ`, which should reproduce the value matrix (row-major).
    pub fn reconstruct(&self) -> Vec<f64> {
        let m = self.weights.len();
        let mut out = vec![0.0; m * m];
        for (lambda, v) in self.spectrum.eigenvalues.iter().zip(&self.eigenvectors) {
            for i in 0..m {
                for j in 0..m {
                    out[i * m + j] += lambda * v[i] * v[j];
                }
            }
        }
        out
    }

    /// Sum of all eigenvalues including the dropped ones.
    pub fn trace(&self) -> f64 {
        self.spectrum.eigenvalues.iter().sum::<f64>() + self.dropped.iter().sum::<f64>()
    }
}

/// Eigendecomposition of `T_W` restricted to block-constant functions.
pub fn decompose(w: &StepGraphon, zero_tol: f64, group_tol: f64) -> Result<SpectralDecomposition> {
    check_tolerances(zero_tol, group_tol)?;
    let m = w.num_blocks();
    let eig = symmetric_eigen(&w.symmetric_matrix(), m)?;
    let inv_sqrt: Vec<f64> = w.weights().iter().map(|x| 1.0 / x.sqrt()).collect();

    let mut kept = Vec::new();
    let mut eigenvectors = Vec::new();
    let mut dropped = Vec::new();
    for (j, &lambda) in eig.values.iter().enumerate() {
        if lambda.abs() > zero_tol {
            let mut f: Vec<f64> = eig
                .vector(j)
                .expect("vectors requested")
                .iter()
                .zip(&inv_sqrt)
                .map(|(x, s)| x * s)
                .collect();
            fix_sign(&mut f);
            kept.push(lambda);
            eigenvectors.push(f);
        } else {
            dropped.push(lambda);
        }
    }
    let spectrum = Spectrum::from_eigenvalues(kept, zero_tol, group_tol)?;
    Ok(SpectralDecomposition {
        spectrum,
        eigenvectors,
        dropped,
        weights: w.weights().to_vec(),
    })
}

pub fn decompose_default(w: &StepGraphon) -> Result<SpectralDecomposition> {
    decompose(w, DEFAULT_ZERO_TOL, DEFAULT_GROUP_TOL)
}

/// `|‖W‖₂² − Σ λ²|`.
pub fn parseval_residual(w: &StepGraphon, d: &SpectralDecomposition) -> f64 {
    (w.l2_norm_sq() - d.spectrum.power_sum(2)).abs()
}

/// Unitary map between block-constant function spaces on a shared partition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Intertwiner {
    pub weights: Vec<f64>,
    pub matrix: Vec<Vec<f64>>,
}

impl Intertwiner {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(f).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `max |Tᵀ D T − D|`.
    pub fn unitarity_residual(&self) -> f64 {
        let m = self.dim();
        let t = &self.matrix;
        let mut worst: f64 = 0.0;
        for a in 0..m {
            for b in 0..m {
                let g: f64 = (0..m).map(|i| t[i][a] * self.weights[i] * t[i][b]).sum();
                let d = if a == b { self.weights[a] } else { 0.0 };
                worst = worst.max((g - d).abs());
            }
        }
        worst
    }

    /// `max |T·S_W − S_U·T|` with `S` the operator matrices on the shared partition.
    pub fn intertwining_residual(&self, u: &StepGraphon, w: &StepGraphon) -> Result<f64> {
        let (u, w) = common_refinement(u, w);
        let m = self.dim();
        if u.num_blocks() != m
            || u.weights()
                .iter()
                .zip(&self.weights)
                .any(|(a, b)| (a - b).abs() > 1e-12)
        {
            return Err(Error::InvalidArgument(
                "intertwiner partition does not match the graphons' common refinement".into(),
            ));
        }
        let su = u.operator_matrix();
        let sw = w.operator_matrix();
        let t = &self.matrix;
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                let left: f64 = (0..m).map(|k| t[i][k] * sw[k * m + j]).sum();
                let right: f64 = (0..m).map(|k| su[i * m + k] * t[k][j]).sum();
                worst = worst.max((left - right).abs());
            }
        }
        Ok(worst)
    }
}

/// Removes from `x` its weighted projection onto each vector in `basis`.
fn project_out(weights: &[f64], basis: &[Vec<f64>], x: &mut [f64]) {
    for b in basis {
        let c = weighted_inner(weights, b, x);
        x.iter_mut().zip(b).for_each(|(xi, bi)| *xi -= c * bi);
    }
}

/// Orthonormal basis of the orthogonal complement of `eigvecs`, built from the
/// coordinate vectors: at each step the candidate with the largest residual
/// (lowest index on ties) is normalized and appended.
fn kernel_basis(weights: &[f64], eigvecs: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let m = weights.len();
    let dim = m - eigvecs.len();
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(dim);
    let mut candidates: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut e = vec![0.0; m];
            e[i] = 1.0 / weights[i].sqrt();
            project_out(weights, eigvecs, &mut e);
            e
        })
        .collect();
    while basis.len() < dim {
        let (best, norm) = candidates
            .iter()
            .map(|c| weighted_inner(weights, c, c).sqrt())
            .enumerate()
            .fold((usize::MAX, 0.0), |acc, (i, n)| if n > acc.1 { (i, n) } else { acc });
        if best == usize::MAX || norm < 1e-6 {
            return Err(Error::Precondition(
                "could not complete an orthonormal kernel basis".into(),
            ));
        }
        let mut v = std::mem::take(&mut candidates[best]);
        // Re-orthogonalize once more before normalizing.
        project_out(weights, eigvecs, &mut v);
        project_out(weights, &basis, &mut v);
        let n = weighted_inner(weights, &v, &v).sqrt();
        v.iter_mut().for_each(|x| *x /= n);
        for c in candidates.iter_mut().filter(|c| !c.is_empty()) {
            project_out(weights, std::slice::from_ref(&v), c);
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Builds a weighted-unitary `T` with `T ∘ T_W = T_U ∘ T` on the common refinement.
///
/// Each eigenvalue group of `w` is mapped onto the matching group of `u`
/// eigenvector by eigenvector, and the kernels are matched by
/// [`kernel_basis`]. Refuses with the discrimination report when the spectra
/// differ and with [`Error::MultiplicityMismatch`] when groups disagree.
pub fn build_intertwiner(u: &StepGraphon, w: &StepGraphon, match_tol: f64) -> Result<Intertwiner> {
    let (ur, wr) = common_refinement(u, w);
    let du = decompose_default(&ur)?;
    let dw = decompose_default(&wr)?;
    if !spectra_equal(&du.spectrum, &dw.spectrum, match_tol) {
        let report = cospectral::discriminate_with_tol(u, w, match_tol)?;
        return Err(Error::SpectraMismatch(Box::new(report)));
    }
    let (gu, gw) = (&du.spectrum.groups, &dw.spectrum.groups);
    for i in 0..gu.len().max(gw.len()) {
        let (vu, mu) = gu.get(i).copied().unwrap_or((f64::NAN, 0));
        let (vw, mw) = gw.get(i).copied().unwrap_or((f64::NAN, 0));
        if mu != mw || !((vu - vw).abs() <= match_tol) {
            return Err(Error::MultiplicityMismatch {
                value: if mu > 0 { vu } else { vw },
                left: mu,
                right: mw,
            });
        }
    }

    let m = ur.num_blocks();
    let weights = ur.weights().to_vec();
    let mut t = vec![vec![0.0; m]; m];
    let mut add_pair = |target: &[f64], source: &[f64]| {
        // T += target (source)ᵀ D
        for i in 0..m {
            for j in 0..m {
                t[i][j] += target[i] * source[j] * weights[j];
            }
        }
    };
    // Groups are aligned and both eigenvector lists follow eigenvalue order,
    // so the a-th eigenvector of W pairs with the a-th of U.
    for (fu, fw) in du.eigenvectors.iter().zip(&dw.eigenvectors) {
        add_pair(fu, fw);
    }
    let ku = kernel_basis(&weights, &du.eigenvectors)?;
    let kw = kernel_basis(&weights, &dw.eigenvectors)?;
    for (fu, fw) in ku.iter().zip(&kw) {
        add_pair(fu, fw);
    }
    Ok(Intertwiner { weights, matrix: t })
}
