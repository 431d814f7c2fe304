//! Cospectrality decisions, discrimination of non-cospectral pairs, and the
//! L¹-norm obstruction to approximating cospectral graphons by cospectral
//! {0,1}-valued ones.
//!
//! Cycle densities are eigenvalue power sums, so two step graphons are
//! cospectral exactly when their nonzero spectra coincide. When they do not,
//! [`discriminate`] isolates the largest modulus `ν` whose `±ν`
//! multiplicities differ and bounds everything below it by `α < ν`:
//!
//! ```text
//! t(C_k,U) − t(C_k,W) = (m⁺_U − m⁺_W + (−1)^k (m⁻_U − m⁻_W)) ν^k ± (h+2) α^k
//! ```
//!
//! and picks the parity of `k` for which the integer coefficient is nonzero.

use serde::{Deserialize, Serialize};

use crate::cut::mean_gap_lower_bound;
use crate::densities::cycle_density_spectral;
use crate::error::{Error, Result};
use crate::graphon::{graph_to_graphon, StepGraphon};
use crate::sampling::{graph_spectrum, sample_graph, SampleSpec, GENERATOR};
use crate::spectral::{
    cluster_sorted, decompose_default, spectra_equal, Spectrum, DEFAULT_MATCH_TOL,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscriminationReport {
    /// Largest modulus at which the `±ν` multiplicities differ.
    pub nu: f64,
    /// Largest modulus strictly below `nu` in either spectrum (0 if none).
    pub alpha: f64,
    /// Half the smallest nonzero modulus; nothing in either spectrum lies below it.
    pub beta: f64,
    pub h_u: usize,
    pub h_w: usize,
    pub h: usize,
    pub m_plus_u: usize,
    pub m_minus_u: usize,
    pub m_plus_w: usize,
    pub m_minus_w: usize,
    /// 0 for even cycle lengths, 1 for odd.
    pub parity: u8,
    pub witness_k: usize,
}

impl DiscriminationReport {
    /// `m⁺_U − m⁺_W + (−1)^k (m⁻_U − m⁻_W)`.
    pub fn coefficient(&self, k: usize) -> i64 {
        let plus = self.m_plus_u as i64 - self.m_plus_w as i64;
        let minus = self.m_minus_u as i64 - self.m_minus_w as i64;
        if k % 2 == 0 {
            plus + minus
        } else {
            plus - minus
        }
    }

    pub fn main_term(&self, k: usize) -> f64 {
        self.coefficient(k) as f64 * self.nu.powi(k as i32)
    }

    /// `(h+2) α^k`.
    pub fn envelope(&self, k: usize) -> f64 {
        (self.h + 2) as f64 * self.alpha.powi(k as i32)
    }

    /// Guaranteed lower bound on `|t(C_k,U) − t(C_k,W)|`; positive at `witness_k`.
    pub fn gap_lower_bound(&self, k: usize) -> f64 {
        self.main_term(k).abs() - self.envelope(k)
    }
}

/// Decides cospectrality by comparing nonzero spectra within `tol`.
pub fn is_cospectral(u: &StepGraphon, w: &StepGraphon, tol: f64) -> Result<bool> {
    let su = decompose_default(u)?.spectrum;
    let sw = decompose_default(w)?.spectrum;
    Ok(spectra_equal(&su, &sw, tol))
}

/// Largest cycle-density difference over `3 <= k <= k_max`.
pub fn max_profile_gap(u: &StepGraphon, w: &StepGraphon, k_max: usize) -> Result<f64> {
    let su = decompose_default(u)?.spectrum;
    let sw = decompose_default(w)?.spectrum;
    let mut worst: f64 = 0.0;
    for k in 3..=k_max {
        let gap = cycle_density_spectral(k, &su)? - cycle_density_spectral(k, &sw)?;
        worst = worst.max(gap.abs());
    }
    Ok(worst)
}

/// Cycle densities `t(C_k, ·)` agree within `tol` for every `3 <= k <= k_max`.
pub fn profiles_match(u: &StepGraphon, w: &StepGraphon, k_max: usize, tol: f64) -> Result<bool> {
    if k_max < 4 {
        return Err(Error::InvalidArgument(format!(
            "profile comparison needs k_max >= 4, got {k_max}"
        )));
    }
    Ok(max_profile_gap(u, w, k_max)? < tol)
}

pub fn discriminate(u: &StepGraphon, w: &StepGraphon) -> Result<DiscriminationReport> {
    discriminate_with_tol(u, w, DEFAULT_MATCH_TOL)
}

/// Moduli within `tol` of each other are treated as equal.
pub fn discriminate_with_tol(u: &StepGraphon, w: &StepGraphon, tol: f64) -> Result<DiscriminationReport> {
    let su = decompose_default(u)?.spectrum;
    let sw = decompose_default(w)?.spectrum;
    discriminate_spectra(&su, &sw, tol)
}

pub fn discriminate_spectra(su: &Spectrum, sw: &Spectrum, tol: f64) -> Result<DiscriminationReport> {
    let mut moduli: Vec<f64> = su
        .eigenvalues
        .iter()
        .chain(&sw.eigenvalues)
        .map(|l| l.abs())
        .collect();
    moduli.sort_by(|a, b| b.total_cmp(a));
    let clusters = cluster_sorted(&moduli, tol)?;

    let count = |s: &Spectrum, lo: f64, hi: f64, positive: bool| {
        s.eigenvalues
            .iter()
            .filter(|l| (**l > 0.0) == positive && l.abs() >= lo && l.abs() <= hi)
            .count()
    };

    for (idx, range) in clusters.iter().enumerate() {
        let (hi, lo) = (moduli[range.start], moduli[range.end - 1]);
        let (mpu, mmu) = (count(su, lo, hi, true), count(su, lo, hi, false));
        let (mpw, mmw) = (count(sw, lo, hi, true), count(sw, lo, hi, false));
        if (mpu, mmu) == (mpw, mmw) {
            continue;
        }
        let nu = moduli[range.clone()].iter().sum::<f64>() / range.len() as f64;
        let alpha = clusters.get(idx + 1).map_or(0.0, |r| moduli[r.start]);
        let beta = moduli.last().copied().unwrap_or(0.0) / 2.0;
        let below = |s: &Spectrum| s.eigenvalues.iter().filter(|l| l.abs() < lo).count();
        let (h_u, h_w) = (below(su), below(sw));
        let h = h_u + h_w;
        let parity = if mpu + mmu != mpw + mmw { 0u8 } else { 1u8 };

        // Smallest k >= 3 of the chosen parity with ν^k > (h+2) α^k.
        let threshold = if alpha > 0.0 {
            ((h + 2) as f64).ln() / (nu / alpha).ln()
        } else {
            f64::NEG_INFINITY
        };
        let mut witness_k = if parity == 0 { 4 } else { 3 };
        while (witness_k as f64) <= threshold {
            witness_k += 2;
        }

        return Ok(DiscriminationReport {
            nu,
            alpha,
            beta,
            h_u,
            h_w,
            h,
            m_plus_u: mpu,
            m_minus_u: mmu,
            m_plus_w: mpw,
            m_minus_w: mmw,
            parity,
            witness_k,
        });
    }
    Err(Error::NothingToDiscriminate)
}

/// Amount by which the actual cycle-density gap escapes the envelope
/// `main_term(k) ± (h+2) α^k`; zero when the formula holds.
pub fn verify_gap_formula(
    u: &StepGraphon,
    w: &StepGraphon,
    r: &DiscriminationReport,
    k: usize,
) -> Result<f64> {
    let su = decompose_default(u)?.spectrum;
    let sw = decompose_default(w)?.spectrum;
    let actual = cycle_density_spectral(k, &su)? - cycle_density_spectral(k, &sw)?;
    Ok(((actual - r.main_term(k)).abs() - r.envelope(k)).max(0.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InapproxCertificate {
    pub l1_u: f64,
    pub l1_w: f64,
    /// `(‖U‖₁ − ‖W‖₁) / 2`.
    pub threshold: f64,
    /// `|∫U − ∫U'|`.
    pub u_gap: f64,
    /// `|∫W − ∫W'|`.
    pub w_gap: f64,
    /// `‖U'‖₂²`, equal to `‖U'‖₁` for {0,1}-valued `U'`.
    pub u_prime_l2sq: f64,
    pub w_prime_l2sq: f64,
    /// `‖U'‖₂² − ‖W'‖₂²`.
    pub l2sq_gap: f64,
    /// Both primes lie within `threshold` of their targets in mean gap.
    pub within_threshold: bool,
    /// `‖U'‖₂² ≥ ‖U‖₁ − u_gap` and `‖W'‖₂² ≤ ‖W‖₁ + w_gap`.
    pub chain_holds: bool,
    /// Primes proven non-cospectral: their Parseval sums differ.
    pub not_cospectral: bool,
}

/// Checks the obstruction for one pair of {0,1}-valued approximants.
///
/// The squared L² norm of a {0,1}-valued graphon equals its L¹ norm, and the
/// L¹ norm moves by at most the mean gap `|∫U − ∫U'|`, which never exceeds
/// the cut distance. If both mean gaps stay below half the L¹ difference of
/// the targets, `‖U'‖₂² > ‖W'‖₂²`, so the spectra differ by Parseval.
pub fn inapprox_check(
    u: &StepGraphon,
    w: &StepGraphon,
    u_prime: &StepGraphon,
    w_prime: &StepGraphon,
) -> Result<InapproxCertificate> {
    if !u_prime.is_zero_one() || !w_prime.is_zero_one() {
        return Err(Error::InvalidArgument(
            "approximating graphons must be {0,1}-valued".into(),
        ));
    }
    let (l1_u, l1_w) = (u.l1_norm(), w.l1_norm());
    if l1_u <= l1_w {
        return Err(Error::Precondition(format!(
            "need ‖U‖₁ > ‖W‖₁, got {l1_u} <= {l1_w}"
        )));
    }
    let threshold = (l1_u - l1_w) / 2.0;
    let u_gap = mean_gap_lower_bound(u, u_prime);
    let w_gap = mean_gap_lower_bound(w, w_prime);
    let u_prime_l2sq = u_prime.l2_norm_sq();
    let w_prime_l2sq = w_prime.l2_norm_sq();
    let slack = 1e-12;
    let chain_holds =
        u_prime_l2sq >= l1_u - u_gap - slack && w_prime_l2sq <= l1_w + w_gap + slack;
    let within_threshold = u_gap < threshold && w_gap < threshold;
    let l2sq_gap = u_prime_l2sq - w_prime_l2sq;
    Ok(InapproxCertificate {
        l1_u,
        l1_w,
        threshold,
        u_gap,
        w_gap,
        u_prime_l2sq,
        w_prime_l2sq,
        l2sq_gap,
        within_threshold,
        chain_holds,
        not_cospectral: within_threshold && chain_holds && l2sq_gap > 0.0,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DemoTrial {
    pub n: usize,
    pub seed: u64,
    pub edge_density_g: f64,
    pub edge_density_h: f64,
    /// `Σ λ²` over the spectrum of `W_{G_n}`.
    pub l2sq_g: f64,
    pub l2sq_h: f64,
    pub gap: f64,
    /// `|∫U − ∫W_{G_n}|` and `|∫W − ∫W_{H_n}|`.
    pub u_mean_gap: f64,
    pub w_mean_gap: f64,
    /// Both mean gaps below the threshold, which forces `gap > 0`.
    pub proximity_ok: bool,
    pub spectra_equal: bool,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theorem42Report {
    pub u: StepGraphon,
    pub w: StepGraphon,
    pub u_spectrum: Spectrum,
    pub w_spectrum: Spectrum,
    pub u_eigenfunction: Vec<f64>,
    pub w_eigenfunction: Vec<f64>,
    pub spectra_match: bool,
    pub l1_u: f64,
    pub l1_w: f64,
    pub threshold: f64,
    pub generator: String,
    pub trials: Vec<DemoTrial>,
    /// Trials whose Parseval gap did not exceed the threshold.
    pub failures: usize,
    /// Trials that met the proximity hypothesis yet have `gap <= 0`; always 0 if the obstruction holds.
    pub counterexamples: usize,
    pub all_pass: bool,
}

pub const DEMO_SIZES: [usize; 3] = [50, 100, 200];

/// The constant-½ graphon against the indicator of `[0,½]²`: equal spectra
/// `{½}`, different L¹ norms, and for each sampled pair `(G_n, H_n)` a
/// Parseval gap larger than `(‖U‖₁ − ‖W‖₁)/2`.
pub fn theorem42_demo(sizes: &[usize], seeds: &[u64]) -> Result<Theorem42Report> {
    let u = StepGraphon::constant(0.5)?;
    let w = StepGraphon::indicator_square(0.5)?;
    let du = decompose_default(&u)?;
    let dw = decompose_default(&w)?;
    let is_half = |s: &Spectrum| s.len() == 1 && (s.eigenvalues[0] - 0.5).abs() <= 1e-10;
    let spectra_match = is_half(&du.spectrum)
        && is_half(&dw.spectrum)
        && spectra_equal(&du.spectrum, &dw.spectrum, DEFAULT_MATCH_TOL);
    let (l1_u, l1_w) = (u.l1_norm(), w.l1_norm());
    let threshold = (l1_u - l1_w) / 2.0;

    let mut trials = Vec::with_capacity(sizes.len() * seeds.len());
    for &n in sizes {
        for &seed in seeds {
            let g = sample_graph(&SampleSpec::new(u.clone(), n, seed)?);
            let h = sample_graph(&SampleSpec::new(w.clone(), n, seed)?);
            let sg = graph_spectrum(&g)?;
            let sh = graph_spectrum(&h)?;
            let (l2sq_g, l2sq_h) = (sg.power_sum(2), sh.power_sum(2));
            let nn = (n * n) as f64;
            let gap = l2sq_g - l2sq_h;
            let u_mean_gap = mean_gap_lower_bound(&u, &graph_to_graphon(&g)?);
            let w_mean_gap = mean_gap_lower_bound(&w, &graph_to_graphon(&h)?);
            trials.push(DemoTrial {
                n,
                seed,
                edge_density_g: 2.0 * g.num_edges() as f64 / nn,
                edge_density_h: 2.0 * h.num_edges() as f64 / nn,
                l2sq_g,
                l2sq_h,
                gap,
                u_mean_gap,
                w_mean_gap,
                proximity_ok: u_mean_gap < threshold && w_mean_gap < threshold,
                spectra_equal: spectra_equal(&sg, &sh, DEFAULT_MATCH_TOL),
                passes: gap > threshold,
            });
        }
    }
    let failures = trials.iter().filter(|t| !t.passes).count();
    let counterexamples = trials.iter().filter(|t| t.proximity_ok && t.gap <= 0.0).count();
    Ok(Theorem42Report {
        u_eigenfunction: du.eigenvectors[0].clone(),
        w_eigenfunction: dw.eigenvectors[0].clone(),
        u_spectrum: du.spectrum,
        w_spectrum: dw.spectrum,
        u,
        w,
        spectra_match,
        l1_u,
        l1_w,
        threshold,
        generator: GENERATOR.to_string(),
        trials,
        failures,
        counterexamples,
        all_pass: spectra_match && failures == 0,
    })
}
