//! Cut norm of step-graphon differences and bounds on the cut distance.
//!
//! For step functions on a common partition, `∫_{S×T} (U − W)` is bilinear in
//! the vectors of block masses of `S` and `T`, each ranging over the box
//! `Π [0, w_i]`. A bilinear form attains its extremes at vertices, so the
//! supremum over measurable sets is a maximum over pairs of block subsets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphon::{common_refinement, Partition, StepGraphon};

/// Largest common refinement handled by [`cut_norm_exact`].
pub const MAX_CUT_BLOCKS: usize = 24;
/// Largest equal-weight refinement searched exhaustively.
pub const MAX_EXHAUSTIVE_BLOCKS: usize = 9;
/// Equal-weight refinements are looked for below this many blocks.
pub const MAX_EQUAL_BLOCKS: usize = 64;

/// Objective values closer than this are treated as ties.
const TIE_EPS: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutNormCertificate {
    pub value: f64,
    pub s_mask: Vec<u8>,
    pub t_mask: Vec<u8>,
}

impl CutNormCertificate {
    /// `|Σ_{i∈S, j∈T} M_ij|` for the weighted difference matrix of `u − w`.
    pub fn evaluate(&self, u: &StepGraphon, w: &StepGraphon) -> Result<f64> {
        let (m, diff) = weighted_difference(u, w);
        if self.s_mask.len() != m || self.t_mask.len() != m {
            return Err(Error::InvalidArgument(
                "certificate masks do not match the common refinement".into(),
            ));
        }
        Ok(bilinear(&diff, m, &self.s_mask, &self.t_mask).abs())
    }
}

/// `M_ij = w_i w_j (u − w)_ij` on the common refinement.
pub fn weighted_difference(u: &StepGraphon, w: &StepGraphon) -> (usize, Vec<f64>) {
    let (u, w) = common_refinement(u, w);
    let m = u.num_blocks();
    let wt = u.weights();
    let mut diff = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..m {
            diff[i * m + j] = wt[i] * wt[j] * (u.value(i, j) - w.value(i, j));
        }
    }
    (m, diff)
}

pub(crate) fn bilinear(diff: &[f64], m: usize, s: &[u8], t: &[u8]) -> f64 {
    let mut total = 0.0;
    for i in (0..m).filter(|&i| s[i] == 1) {
        for j in (0..m).filter(|&j| t[j] == 1) {
            total += diff[i * m + j];
        }
    }
    total
}

/// Mask over blocks whose integer key orders masks lexicographically (block 0 is the top bit).
fn mask_of(key: u32, m: usize) -> Vec<u8> {
    (0..m).map(|i| ((key >> (m - 1 - i)) & 1) as u8).collect()
}

/// Maximizes `|sᵀ M t|` over 0/1 vectors. Returns `(value, s_mask, t_mask)`.
///
/// `s` runs over a Gray code so each step updates the column sums `sᵀM` in
/// `O(m)`; for each `s` the best `t` takes the positive (or negative) columns.
fn cut_norm_matrix(diff: &[f64], m: usize) -> (f64, Vec<u8>, Vec<u8>) {
    assert!(m <= MAX_CUT_BLOCKS);
    let mut col = vec![0.0; m];
    let mut best = (0.0f64, 0u32);
    let mut key = 0u32;
    for step in 1u32..(1u32 << m) {
        let bit = step.trailing_zeros() as usize;
        key ^= 1 << bit;
        let row = m - 1 - bit;
        let sign = if key & (1 << bit) != 0 { 1.0 } else { -1.0 };
        for (c, d) in col.iter_mut().zip(&diff[row * m..(row + 1) * m]) {
            *c += sign * d;
        }
        let (mut pos, mut neg) = (0.0, 0.0);
        for &c in &col {
            if c > 0.0 {
                pos += c;
            } else {
                neg -= c;
            }
        }
        let value = pos.max(neg);
        if value > best.0 + TIE_EPS || ((value - best.0).abs() <= TIE_EPS && key < best.1) {
            best = (value, key);
        }
    }

    // Rebuild the certificate from scratch so its value carries no drift from the updates.
    let s = mask_of(best.1, m);
    let mut col = vec![0.0; m];
    for i in (0..m).filter(|&i| s[i] == 1) {
        for j in 0..m {
            col[j] += diff[i * m + j];
        }
    }
    let pos: f64 = col.iter().filter(|c| **c > 0.0).sum();
    let neg: f64 = -col.iter().filter(|c| **c < 0.0).sum::<f64>();
    let t: Vec<u8> = if pos >= neg {
        col.iter().map(|&c| u8::from(c > 0.0)).collect()
    } else {
        col.iter().map(|&c| u8::from(c < 0.0)).collect()
    };
    let value = bilinear(diff, m, &s, &t).abs();
    (value, s, t)
}

/// Exact `d_□(u, w)` with a maximizing pair of block subsets.
///
/// Ties are broken towards the lexicographically smallest `s_mask`.
pub fn cut_norm_exact(u: &StepGraphon, w: &StepGraphon) -> Result<CutNormCertificate> {
    let (m, diff) = weighted_difference(u, w);
    if m > MAX_CUT_BLOCKS {
        return Err(Error::GuardExceeded {
            what: "cut norm common refinement (use mean_gap_lower_bound / cut_distance_upper)",
            size: m as u128,
            bound: MAX_CUT_BLOCKS as u128,
        });
    }
    let (value, s_mask, t_mask) = cut_norm_matrix(&diff, m);
    Ok(CutNormCertificate {
        value,
        s_mask,
        t_mask,
    })
}

/// `∫ (u − w)`, the cut-norm objective at `S = T = [0,1]`.
pub fn mean_gap(u: &StepGraphon, w: &StepGraphon) -> f64 {
    u.l1_norm() - w.l1_norm()
}

/// `|∫u − ∫w|`, a lower bound on the cut distance: the full square is one
/// admissible `S × T` and the integral is invariant under relabeling.
pub fn mean_gap_lower_bound(u: &StepGraphon, w: &StepGraphon) -> f64 {
    mean_gap(u, w).abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStrategy {
    /// All block permutations (at most [`MAX_EXHAUSTIVE_BLOCKS`] blocks).
    Exhaustive,
    /// Best-improvement pairwise swaps from the identity.
    Greedy,
}

/// Smallest `q < MAX_EQUAL_BLOCKS`, `q >= m`, such that every boundary is a multiple of `1/q`.
fn equal_weight_blocks(p: &Partition) -> Option<usize> {
    (p.len()..MAX_EQUAL_BLOCKS).find(|&q| {
        p.boundaries().iter().all(|&b| {
            let x = b * q as f64;
            (x - x.round()).abs() <= 1e-9
        })
    })
}

/// Upper bound on the cut distance: the smallest cut norm `d_□(u^π, w)` over
/// the searched block permutations `π` of an equal-weight common refinement.
pub fn cut_distance_upper(u: &StepGraphon, w: &StepGraphon, strategy: SearchStrategy) -> Result<f64> {
    let (ur, wr) = common_refinement(u, w);
    let q = equal_weight_blocks(&ur.partition()).ok_or_else(|| {
        Error::Precondition(format!(
            "no equal-weight refinement with fewer than {MAX_EQUAL_BLOCKS} blocks"
        ))
    })?;
    let limit = match strategy {
        SearchStrategy::Exhaustive => MAX_EXHAUSTIVE_BLOCKS,
        SearchStrategy::Greedy => MAX_CUT_BLOCKS,
    };
    if q > limit {
        return Err(Error::GuardExceeded {
            what: "equal-weight refinement for permutation search",
            size: q as u128,
            bound: limit as u128,
        });
    }
    let mut bounds: Vec<f64> = (0..=q).map(|i| i as f64 / q as f64).collect();
    bounds[q] = 1.0;
    let fine = Partition::new(bounds)?;
    let ue = ur.refine_to(&fine)?;
    let we = wr.refine_to(&fine)?;
    let cw = 1.0 / (q * q) as f64;

    let cost = |perm: &[usize]| -> f64 {
        let mut diff = vec![0.0; q * q];
        for i in 0..q {
            for j in 0..q {
                diff[i * q + j] = cw * (ue.value(perm[i], perm[j]) - we.value(i, j));
            }
        }
        cut_norm_matrix(&diff, q).0
    };

    let mut perm: Vec<usize> = (0..q).collect();
    let mut best = cost(&perm);
    match strategy {
        SearchStrategy::Exhaustive => {
            while next_permutation(&mut perm) {
                best = best.min(cost(&perm));
            }
        }
        SearchStrategy::Greedy => loop {
            let mut improved: Option<(f64, usize, usize)> = None;
            for a in 0..q {
                for b in a + 1..q {
                    perm.swap(a, b);
                    let c = cost(&perm);
                    perm.swap(a, b);
                    if c < improved.map_or(best, |x| x.0) - TIE_EPS {
                        improved = Some((c, a, b));
                    }
                }
            }
            match improved {
                Some((c, a, b)) => {
                    perm.swap(a, b);
                    best = c;
                }
                None => break,
            }
        },
    }
    Ok(best)
}

/// Advances to the next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
