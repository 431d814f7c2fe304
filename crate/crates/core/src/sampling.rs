//! W-random graphs and convergence diagnostics.
//!
//! Streams: a `ChaCha8Rng` seeded with `seed` draws vertex positions on
//! stream 0 and edge coins on stream 1, the coins taken in row-major order
//! over pairs `i < j`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cut::mean_gap_lower_bound;
use crate::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::graphon::{graph_to_graphon, SimpleGraph, StepGraphon};
use crate::spectral::{Spectrum, DEFAULT_GROUP_TOL, DEFAULT_ZERO_TOL};

pub const GENERATOR: &str = "ChaCha8 (rand_chacha 0.3); stream 0 = vertex positions, stream 1 = edge coins";

/// Largest graph handled by the dense graph-scale eigensolve.
pub const MAX_SPECTRAL_VERTICES: usize = 1024;

const POSITION_STREAM: u64 = 0;
const EDGE_STREAM: u64 = 1;

#[derive(Debug, Clone)]
pub struct SampleSpec {
    pub n: usize,
    pub seed: u64,
    pub source: StepGraphon,
}

impl SampleSpec {
    pub fn new(source: StepGraphon, n: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("sample size n must be at least 1".into()));
        }
        Ok(Self { n, seed, source })
    }
}

/// Block index of each sampled vertex position.
pub fn sample_blocks(spec: &SampleSpec) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(POSITION_STREAM);
    let partition = spec.source.partition();
    (0..spec.n)
        .map(|_| partition.locate(rng.gen::<f64>()))
        .collect()
}

/// Draws `G(n, W)`: positions `x_i ~ U[0,1)`, edge `{i,j}` with probability `W(x_i, x_j)`.
pub fn sample_graph(spec: &SampleSpec) -> SimpleGraph {
    let blocks = sample_blocks(spec);
    let mut coins = ChaCha8Rng::seed_from_u64(spec.seed);
    coins.set_stream(EDGE_STREAM);
    let n = spec.n;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = spec.source.value(blocks[i], blocks[j]);
            if coins.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("sampled edges are in range and loop-free")
}

/// Nonzero spectrum of `W_G`, i.e. of `A_G / n`.
pub fn graph_spectrum(g: &SimpleGraph) -> Result<Spectrum> {
    let n = g.num_vertices();
    if n == 0 || n > MAX_SPECTRAL_VERTICES {
        return Err(Error::GuardExceeded {
            what: "graph-scale eigensolve vertex count",
            size: n as u128,
            bound: MAX_SPECTRAL_VERTICES as u128,
        });
    }
    let scale = 1.0 / n as f64;
    let a: Vec<f64> = g.adjacency().into_iter().map(|x| f64::from(x) * scale).collect();
    Spectrum::from_eigenvalues(symmetric_eigenvalues(&a, n)?, DEFAULT_ZERO_TOL, DEFAULT_GROUP_TOL)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceEntry {
    pub n: usize,
    pub l1: f64,
    pub l2sq: f64,
    /// Up to eight largest eigenvalues of `W_{G_n}`, descending.
    pub top_eigs: Vec<f64>,
    pub mean_gap_lb: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub generator: String,
    pub seed: u64,
    pub entries: Vec<ConvergenceEntry>,
}

pub fn convergence_entry(source: &StepGraphon, n: usize, seed: u64) -> Result<ConvergenceEntry> {
    if n > MAX_SPECTRAL_VERTICES {
        return Err(Error::GuardExceeded {
            what: "graph-scale eigensolve vertex count",
            size: n as u128,
            bound: MAX_SPECTRAL_VERTICES as u128,
        });
    }
    let g = sample_graph(&SampleSpec::new(source.clone(), n, seed)?);
    let wg = graph_to_graphon(&g)?;
    let spectrum = graph_spectrum(&g)?;
    Ok(ConvergenceEntry {
        n,
        l1: wg.l1_norm(),
        l2sq: wg.l2_norm_sq(),
        top_eigs: spectrum.eigenvalues.iter().take(8).copied().collect(),
        mean_gap_lb: mean_gap_lower_bound(source, &wg),
    })
}

pub fn convergence_report(source: &StepGraphon, n_list: &[usize], seed: u64) -> Result<ConvergenceReport> {
    let entries = n_list
        .iter()
        .map(|&n| convergence_entry(source, n, seed))
        .collect::<Result<_>>()?;
    Ok(ConvergenceReport {
        generator: GENERATOR.to_string(),
        seed,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_sources() {
        let one = StepGraphon::constant(1.0).unwrap();
        let zero = StepGraphon::constant(0.0).unwrap();
        let g = sample_graph(&SampleSpec::new(one, 12, 3).unwrap());
        assert_eq!(g, SimpleGraph::complete(12));
        let g = sample_graph(&SampleSpec::new(zero, 12, 3).unwrap());
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn reproducible() {
        let w = StepGraphon::new(vec![0.3, 0.7], vec![vec![0.8, 0.2], vec![0.2, 0.5]]).unwrap();
        let a = sample_graph(&SampleSpec::new(w.clone(), 60, 99).unwrap());
        let b = sample_graph(&SampleSpec::new(w.clone(), 60, 99).unwrap());
        let c = sample_graph(&SampleSpec::new(w, 60, 100).unwrap());
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn zero_vertices_rejected() {
        assert!(SampleSpec::new(StepGraphon::constant(0.5).unwrap(), 0, 1).is_err());
    }

    #[test]
    fn single_vertex_report() {
        let w = StepGraphon::constant(0.5).unwrap();
        let r = convergence_report(&w, &[1], 5).unwrap();
        let e = &r.entries[0];
        assert_eq!((e.n, e.l1, e.l2sq), (1, 0.0, 0.0));
        assert!(e.top_eigs.is_empty());
        assert_eq!(e.mean_gap_lb, 0.5);
    }

    #[test]
    fn blocks_follow_partition() {
        let w = StepGraphon::indicator_square(0.5).unwrap();
        let spec = SampleSpec::new(w, 400, 8).unwrap();
        let first = sample_blocks(&spec).iter().filter(|&&b| b == 0).count();
        assert!((150..250).contains(&first), "{first}");
    }
}
