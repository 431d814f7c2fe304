//! Homomorphism densities and counts, and cycle densities via eigenvalue power sums.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphon::{graph_to_graphon, SimpleGraph, StepGraphon};
use crate::spectral::{decompose_default, Spectrum};

/// Ceiling on the number of vertex assignments an exact enumeration may visit.
pub const ENUMERATION_BOUND: u128 = 100_000_000;

pub const DEFAULT_K_MAX: usize = 16;

/// Cycle densities `t(C_k, W)` for `k = k_min..=k_max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleProfile {
    pub k_min: usize,
    pub values: Vec<f64>,
}

impl CycleProfile {
    pub fn k_max(&self) -> usize {
        self.k_min + self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        k.checked_sub(self.k_min).and_then(|i| self.values.get(i).copied())
    }
}

fn check_guard(what: &'static str, base: usize, exp: usize) -> Result<()> {
    let size = (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    if exp > u32::MAX as usize || size > ENUMERATION_BOUND {
        return Err(Error::GuardExceeded {
            what,
            size,
            bound: ENUMERATION_BOUND,
        });
    }
    Ok(())
}

/// For each vertex, its neighbours that come earlier in vertex order.
fn back_edges(f: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut back = vec![Vec::new(); f.num_vertices()];
    for (a, b) in f.edges() {
        back[b].push(a);
    }
    back
}

/// `t(F, W)` by summing over all block assignments `φ: V(F) → [m]`.
///
/// Assignments are visited depth-first in mixed-radix order; a branch is cut
/// as soon as its partial product is zero.
pub fn density_direct(f: &SimpleGraph, w: &StepGraphon) -> Result<f64> {
    let k = f.num_vertices();
    if k == 0 {
        return Err(Error::InvalidGraph("pattern graph has no vertices".into()));
    }
    let m = w.num_blocks();
    check_guard("block assignments m^v(F)", m, k)?;
    let back = back_edges(f);
    let mut phi = vec![0usize; k];

    fn go(
        v: usize,
        acc: f64,
        phi: &mut [usize],
        back: &[Vec<usize>],
        w: &StepGraphon,
    ) -> f64 {
        if v == phi.len() {
            return acc;
        }
        let mut total = 0.0;
        for b in 0..w.num_blocks() {
            let mut p = acc * w.weights()[b];
            for &u in &back[v] {
                p *= w.value(phi[u], b);
            }
            if p == 0.0 {
                continue;
            }
            phi[v] = b;
            total += go(v + 1, p, phi, back, w);
        }
        total
    }

    Ok(go(0, 1.0, &mut phi, &back, w))
}

/// `Σ λ^k` over a spectrum; equals `t(C_k, W)` for `k >= 3`.
pub fn cycle_density_spectral(k: usize, s: &Spectrum) -> Result<f64> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "the cycle/power-sum identity needs k >= 3, got {k}"
        )));
    }
    let k = u32::try_from(k).map_err(|_| Error::InvalidArgument("k too large".into()))?;
    Ok(s.power_sum(k))
}

pub fn cycle_profile_of(s: &Spectrum, k_max: usize) -> Result<CycleProfile> {
    if k_max < 3 {
        return Err(Error::InvalidArgument(format!("k_max must be >= 3, got {k_max}")));
    }
    let values = (3..=k_max)
        .map(|k| cycle_density_spectral(k, s))
        .collect::<Result<_>>()?;
    Ok(CycleProfile { k_min: 3, values })
}

/// Cycle densities `t(C_3..C_{k_max}, W)` from the spectrum of `W`.
pub fn cycle_profile(w: &StepGraphon, k_max: usize) -> Result<CycleProfile> {
    if k_max < 3 {
        return Err(Error::InvalidArgument(format!("k_max must be >= 3, got {k_max}")));
    }
    let d = decompose_default(w)?;
    cycle_profile_of(&d.spectrum, k_max)
}

/// Number of homomorphisms `F → G`.
pub fn hom_count(f: &SimpleGraph, g: &SimpleGraph) -> Result<u128> {
    let k = f.num_vertices();
    let n = g.num_vertices();
    if k == 0 {
        return Ok(1);
    }
    check_guard("vertex maps v(G)^v(F)", n, k)?;
    let back = back_edges(f);
    let adj = g.adjacency();
    let mut phi = vec![0usize; k];

    fn go(v: usize, phi: &mut [usize], back: &[Vec<usize>], adj: &[u8], n: usize) -> u128 {
        if v == phi.len() {
            return 1;
        }
        let mut total = 0;
        for x in 0..n {
            if back[v].iter().all(|&u| adj[phi[u] * n + x] == 1) {
                phi[v] = x;
                total += go(v + 1, phi, back, adj, n);
            }
        }
        total
    }

    Ok(go(0, &mut phi, &back, &adj, n))
}

/// `|t(F, W_G) − hom(F,G) / v(G)^v(F)|`.
pub fn graph_density_consistency(f: &SimpleGraph, g: &SimpleGraph) -> Result<f64> {
    let w = graph_to_graphon(g)?;
    let t = density_direct(f, &w)?;
    let hom = hom_count(f, g)?;
    let norm = (g.num_vertices() as f64).powi(f.num_vertices() as i32);
    Ok((t - hom as f64 / norm).abs())
}
