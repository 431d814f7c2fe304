#![allow(dead_code)]

use graphon_spectra::{SimpleGraph, StepGraphon};
use num_bigint::BigInt;
use num_traits::{Float, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_weights(rng: &mut impl Rng, m: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..m).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

pub fn random_graphon(rng: &mut impl Rng, m: usize) -> StepGraphon {
    let weights = random_weights(rng, m);
    let mut values = vec![0.0; m * m];
    for i in 0..m {
        for j in i..m {
            let v = rng.gen::<f64>();
            values[i * m + j] = v;
            values[j * m + i] = v;
        }
    }
    StepGraphon::from_flat(weights, values).unwrap()
}

pub fn random_zero_one(rng: &mut impl Rng, m: usize) -> StepGraphon {
    let weights = random_weights(rng, m);
    let mut values = vec![0.0; m * m];
    for i in 0..m {
        for j in i..m {
            let v = if rng.gen_bool(0.5) { 1.0 } else { 0.0 };
            values[i * m + j] = v;
            values[j * m + i] = v;
        }
    }
    StepGraphon::from_flat(weights, values).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    p.shuffle(rng);
    p
}

/// Block-diagonal graphon whose nonzero spectrum is exactly `eigs` (each in (0, 0.25]):
/// block `i` has a random weight in [0.25, 0.3] and value `eigs[i] / weight`;
/// the remaining mass is a zero block.
pub fn diagonal_with_spectrum(rng: &mut impl Rng, eigs: &[f64]) -> StepGraphon {
    assert!(eigs.len() <= 3);
    let mut weights: Vec<f64> = eigs.iter().map(|_| rng.gen_range(0.25..0.3)).collect();
    let used: f64 = weights.iter().sum();
    let mut diag: Vec<f64> = eigs.iter().zip(&weights).map(|(l, a)| l / a).collect();
    if used < 1.0 {
        weights.push(1.0 - used);
        diag.push(0.0);
    }
    StepGraphon::block_diagonal(weights, &diag).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Independent,
    Permuted,
    Cospectral,
    Perturbed,
}

/// Mixed corpus of pairs with at most 4 blocks each.
pub fn pair_corpus(seed: u64, count: usize) -> Vec<(PairKind, StepGraphon, StepGraphon)> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| match i % 10 {
            0..=3 => {
                let (a, b) = (r.gen_range(1..=4), r.gen_range(1..=4));
                (PairKind::Independent, random_graphon(&mut r, a), random_graphon(&mut r, b))
            }
            4 | 5 => {
                let m = r.gen_range(2..=4);
                let u = random_graphon(&mut r, m);
                let p = random_permutation(&mut r, m);
                let w = u.permuted(&p).unwrap();
                (PairKind::Permuted, u, w)
            }
            6..=8 => {
                let k = r.gen_range(1..=3);
                let eigs: Vec<f64> = (0..k).map(|_| r.gen_range(0.02..0.25)).collect();
                let mut shuffled = eigs.clone();
                shuffled.shuffle(&mut r);
                let u = diagonal_with_spectrum(&mut r, &eigs);
                let w = diagonal_with_spectrum(&mut r, &shuffled);
                (PairKind::Cospectral, u, w)
            }
            _ => {
                let k = r.gen_range(1..=3);
                let eigs: Vec<f64> = (0..k).map(|_| r.gen_range(0.02..0.24)).collect();
                let u = diagonal_with_spectrum(&mut r, &eigs);
                // Same blocks bit for bit, one eigenvalue moved by 1e-3, then shuffled.
                let weights = u.weights().to_vec();
                let mut diag: Vec<f64> = (0..weights.len()).map(|i| u.value(i, i)).collect();
                let j = r.gen_range(0..k);
                diag[j] += 1e-3 / weights[j];
                let w = StepGraphon::block_diagonal(weights.clone(), &diag).unwrap();
                let p = random_permutation(&mut r, weights.len());
                (PairKind::Perturbed, u, w.permuted(&p).unwrap())
            }
        })
        .collect()
}

/// All graphs on `n` labelled vertices.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..(1 << pairs.len()))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            SimpleGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// `trace(A^k)` with exact integer arithmetic.
pub fn trace_power(g: &SimpleGraph, k: usize) -> u128 {
    let n = g.num_vertices();
    let a: Vec<u128> = g.adjacency().into_iter().map(u128::from).collect();
    let mut p = a.clone();
    for _ in 1..k {
        let mut next = vec![0u128; n * n];
        for i in 0..n {
            for l in 0..n {
                if p[i * n + l] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i * n + j] += p[i * n + l] * a[l * n + j];
                }
            }
        }
        p = next;
    }
    (0..n).map(|i| p[i * n + i]).sum()
}

/// Brute-force `t(F, W)` over every block assignment, no pruning.
pub fn density_brute(f: &SimpleGraph, w: &StepGraphon) -> f64 {
    let k = f.num_vertices();
    let m = w.num_blocks();
    let edges: Vec<(usize, usize)> = f.edges().collect();
    let mut total = 0.0;
    for code in 0..m.pow(k as u32) {
        let mut phi = vec![0usize; k];
        let mut c = code;
        for slot in phi.iter_mut() {
            *slot = c % m;
            c /= m;
        }
        let mut p: f64 = phi.iter().map(|&b| w.weights()[b]).product();
        for &(a, b) in &edges {
            p *= w.value(phi[a], phi[b]);
        }
        total += p;
    }
    total
}

/// `t(C_k, W) = trace(S^k)` with `S_ij = √a_i W_ij √a_j`, by repeated multiplication.
pub fn cycle_density_by_powers(w: &StepGraphon, k: usize) -> f64 {
    let m = w.num_blocks();
    let a = w.weights();
    let s: Vec<f64> = (0..m * m)
        .map(|x| {
            let (i, j) = (x / m, x % m);
            a[i].sqrt() * w.value(i, j) * a[j].sqrt()
        })
        .collect();
    let mut p = s.clone();
    for _ in 1..k {
        let mut next = vec![0.0; m * m];
        for i in 0..m {
            for l in 0..m {
                for j in 0..m {
                    next[i * m + j] += p[i * m + l] * s[l * m + j];
                }
            }
        }
        p = next;
    }
    (0..m).map(|i| p[i * m + i]).sum()
}

/// Exact dyadic rational `mantissa · 2^exp`.
#[derive(Debug, Clone)]
pub struct Dyadic {
    pub mantissa: BigInt,
    pub exp: i64,
}

impl Dyadic {
    fn of(x: f64) -> Self {
        let (m, e, sign) = x.integer_decode();
        Dyadic {
            mantissa: BigInt::from(m) * i64::from(sign),
            exp: i64::from(e),
        }
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let exp = self.exp.min(other.exp);
        let a = &self.mantissa << (self.exp - exp) as usize;
        let b = &other.mantissa << (other.exp - exp) as usize;
        Dyadic { mantissa: a - b, exp }
    }

    pub fn signum(&self) -> f64 {
        match self.mantissa.sign() {
            num_bigint::Sign::Minus => -1.0,
            num_bigint::Sign::NoSign => 0.0,
            num_bigint::Sign::Plus => 1.0,
        }
    }

    /// May underflow to zero; use [`Dyadic::signum`] for the exact sign.
    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let shift = (bits - 64).max(0);
        let top = (&self.mantissa >> shift as usize).to_f64().unwrap();
        top * 2f64.powi((self.exp + shift).clamp(-2000, 2000) as i32)
    }
}

/// Exact `t(C_k, W) = trace((B D)^k)` over the dyadic rationals the f64 inputs denote.
pub fn cycle_density_exact(w: &StepGraphon, k: usize) -> Dyadic {
    let m = w.num_blocks();
    let entries: Vec<Dyadic> = (0..m * m)
        .map(|x| {
            let (v, a) = (Dyadic::of(w.value(x / m, x % m)), Dyadic::of(w.weights()[x % m]));
            Dyadic {
                mantissa: v.mantissa * a.mantissa,
                exp: v.exp + a.exp,
            }
        })
        .collect();
    let base = entries.iter().map(|d| d.exp).min().unwrap();
    let b: Vec<BigInt> = entries
        .into_iter()
        .map(|d| d.mantissa << (d.exp - base) as usize)
        .collect();
    let mut p = b.clone();
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); m * m];
        for i in 0..m {
            for l in 0..m {
                if p[i * m + l].is_zero() {
                    continue;
                }
                for j in 0..m {
                    next[i * m + j] += &p[i * m + l] * &b[l * m + j];
                }
            }
        }
        p = next;
    }
    Dyadic {
        mantissa: (0..m).fold(BigInt::zero(), |acc, i| acc + &p[i * m + i]),
        exp: base * k as i64,
    }
}
