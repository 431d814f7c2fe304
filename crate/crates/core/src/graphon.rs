//! Step graphons, simple graphs and the partition algebra that links them.
//!
//! A step graphon is stored as a list of positive block weights (the lengths
//! of consecutive intervals of `[0,1]`) together with a symmetric matrix of
//! block values in `[0,1]`. Blocks are positional: the `i`-th weight is the
//! `i`-th interval from the left.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the total block weight and on value excursions outside `[0,1]`.
pub const WEIGHT_TOL: f64 = 1e-12;

/// Boundaries closer than this are merged when overlaying partitions.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Consecutive blocks of `[0,1]` given by cumulative boundaries
/// `0 = b_0 < b_1 < ... < b_m = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    boundaries: Vec<f64>,
}

impl Partition {
    pub fn new(boundaries: Vec<f64>) -> Result<Self> {
        if boundaries.len() < 2 {
            return Err(Error::InvalidArgument(
                "a partition needs at least two boundaries".into(),
            ));
        }
        if boundaries[0] != 0.0 || *boundaries.last().unwrap() != 1.0 {
            return Err(Error::InvalidArgument(
                "partition boundaries must start at 0 and end at 1".into(),
            ));
        }
        if boundaries.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidArgument(
                "partition boundaries must be strictly increasing".into(),
            ));
        }
        Ok(Self { boundaries })
    }

    pub fn from_weights(weights: &[f64]) -> Self {
        let mut boundaries = Vec::with_capacity(weights.len() + 1);
        let mut acc = 0.0;
        boundaries.push(0.0);
        for &w in &weights[..weights.len() - 1] {
            acc += w;
            boundaries.push(acc);
        }
        boundaries.push(1.0);
        Self { boundaries }
    }

    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    pub fn len(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weights(&self) -> Vec<f64> {
        self.boundaries.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Index of the block containing `x` (blocks are half-open, the last one closed).
    pub fn locate(&self, x: f64) -> usize {
        let inner = &self.boundaries[1..self.boundaries.len() - 1];
        inner.partition_point(|&b| b <= x)
    }

    /// Sorted merge of both boundary sets; boundaries within [`BOUNDARY_TOL`]
    /// of each other collapse onto the earlier one.
    pub fn overlay(&self, other: &Partition) -> Partition {
        let mut merged: Vec<f64> = self
            .boundaries
            .iter()
            .chain(other.boundaries.iter())
            .copied()
            .collect();
        merged.sort_by(f64::total_cmp);
        let mut out: Vec<f64> = Vec::with_capacity(merged.len());
        for b in merged {
            match out.last() {
                Some(&last) if b - last <= BOUNDARY_TOL => {}
                _ => out.push(b),
            }
        }
        // The final boundary must be exactly 1 even if a near-1 point was kept.
        if *out.last().unwrap() != 1.0 {
            out.pop();
            out.push(1.0);
        }
        Partition { boundaries: out }
    }

    /// For each block of `self` (a refinement of `coarse`), the coarse block containing it.
    fn parent_blocks(&self, coarse: &Partition) -> Vec<usize> {
        self.boundaries
            .windows(2)
            .map(|w| coarse.locate(0.5 * (w[0] + w[1])))
            .collect()
    }
}

/// Rescales weights whose sum is off by more than rounding noise. Sums
/// within a few ulps of 1 are left alone, so normalizing twice changes nothing.
fn normalize_weights(weights: &mut [f64], total: f64) {
    if (total - 1.0).abs() > 8.0 * f64::EPSILON {
        weights.iter_mut().for_each(|w| *w /= total);
    }
}

/// Symmetric step function on `[0,1]^2` with values in `[0,1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawStepGraphon", into = "RawStepGraphon")]
pub struct StepGraphon {
    weights: Vec<f64>,
    /// Row-major `m x m`.
    values: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawStepGraphon {
    weights: Vec<f64>,
    values: Vec<Vec<f64>>,
}

impl TryFrom<RawStepGraphon> for StepGraphon {
    type Error = Error;

    fn try_from(raw: RawStepGraphon) -> Result<Self> {
        StepGraphon::new(raw.weights, raw.values)
    }
}

impl From<StepGraphon> for RawStepGraphon {
    fn from(w: StepGraphon) -> Self {
        let values = w.rows();
        RawStepGraphon {
            weights: w.weights,
            values,
        }
    }
}

impl StepGraphon {
    /// Validates and normalizes a step graphon.
    ///
    /// Weights must be strictly positive and sum to 1 within [`WEIGHT_TOL`];
    /// they are then rescaled to sum to 1. Values must be exactly symmetric
    /// and lie in `[0,1]` up to [`WEIGHT_TOL`]; small excursions are clamped.
    pub fn new(weights: Vec<f64>, values: Vec<Vec<f64>>) -> Result<Self> {
        let m = weights.len();
        if values.len() != m || values.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidGraphon(format!(
                "value matrix must be {m}x{m} to match {m} weights"
            )));
        }
        Self::from_flat(weights, values.into_iter().flatten().collect())
    }

    pub fn from_flat(mut weights: Vec<f64>, mut values: Vec<f64>) -> Result<Self> {
        let m = weights.len();
        if m == 0 {
            return Err(Error::InvalidGraphon("at least one block is required".into()));
        }
        if values.len() != m * m {
            return Err(Error::InvalidGraphon(format!(
                "expected {} values, got {}",
                m * m,
                values.len()
            )));
        }
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w > 0.0))
        {
            return Err(Error::InvalidGraphon(format!(
                "block weight {i} is {w}; weights must be strictly positive"
            )));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > WEIGHT_TOL {
            return Err(Error::InvalidGraphon(format!(
                "block weights sum to {total}, not 1"
            )));
        }
        normalize_weights(&mut weights, total);
        for i in 0..m {
            for j in 0..m {
                let v = values[i * m + j];
                if !(-WEIGHT_TOL..=1.0 + WEIGHT_TOL).contains(&v) {
                    return Err(Error::InvalidGraphon(format!(
                        "value [{i}][{j}] = {v} lies outside [0,1]"
                    )));
                }
                if v != values[j * m + i] {
                    return Err(Error::InvalidGraphon(format!(
                        "value matrix is not symmetric at [{i}][{j}]"
                    )));
                }
            }
        }
        values.iter_mut().for_each(|v| *v = v.clamp(0.0, 1.0));
        Ok(Self { weights, values })
    }

    /// The constant graphon `W = c` on a single block.
    pub fn constant(c: f64) -> Result<Self> {
        Self::from_flat(vec![1.0], vec![c])
    }

    /// `1` on `[0,a]^2` and `0` elsewhere.
    pub fn indicator_square(a: f64) -> Result<Self> {
        if a >= 1.0 {
            return Self::constant(1.0);
        }
        Self::from_flat(vec![a, 1.0 - a], vec![1.0, 0.0, 0.0, 0.0])
    }

    /// Block-diagonal graphon: block `i` has weight `weights[i]`, value
    /// `diag[i]` on its own square and 0 off the diagonal.
    pub fn block_diagonal(weights: Vec<f64>, diag: &[f64]) -> Result<Self> {
        let m = weights.len();
        if diag.len() != m {
            return Err(Error::InvalidGraphon("diagonal length mismatch".into()));
        }
        let mut values = vec![0.0; m * m];
        for (i, &d) in diag.iter().enumerate() {
            values[i * m + i] = d;
        }
        Self::from_flat(weights, values)
    }

    pub fn num_blocks(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Row-major value matrix.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.num_blocks() + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.values
            .chunks(self.num_blocks())
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn partition(&self) -> Partition {
        Partition::from_weights(&self.weights)
    }

    /// Every block value is exactly 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// Reorders blocks: block `k` of the result is block `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let m = self.num_blocks();
        let mut seen = vec![false; m];
        if perm.len() != m || perm.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of {m} blocks"
            )));
        }
        let weights = perm.iter().map(|&p| self.weights[p]).collect();
        let mut values = Vec::with_capacity(m * m);
        for &a in perm {
            for &b in perm {
                values.push(self.value(a, b));
            }
        }
        Self::from_flat(weights, values)
    }

    /// Same function expressed on a finer partition.
    ///
    /// `fine` must refine the graphon's own partition (up to [`BOUNDARY_TOL`]).
    pub fn refine_to(&self, fine: &Partition) -> Result<Self> {
        let own = self.partition();
        let covered = own.boundaries().iter().all(|b| {
            fine.boundaries()
                .iter()
                .any(|f| (f - b).abs() <= BOUNDARY_TOL)
        });
        if !covered {
            return Err(Error::InvalidArgument(
                "target partition does not refine the graphon's partition".into(),
            ));
        }
        let parents = fine.parent_blocks(&own);
        let n = parents.len();
        let mut values = Vec::with_capacity(n * n);
        for &a in &parents {
            for &b in &parents {
                values.push(self.value(a, b));
            }
        }
        Self::from_flat(fine.weights(), values)
    }

    /// `∫ W = Σ_ij w_i w_j W_ij`, summed row by row in block order.
    pub fn l1_norm(&self) -> f64 {
        self.weighted_sum(|v| v)
    }

    /// `∫ W^2`, same summation order as [`l1_norm`](Self::l1_norm), so the two
    /// agree bitwise on 0/1-valued graphons.
    pub fn l2_norm_sq(&self) -> f64 {
        self.weighted_sum(|v| v * v)
    }

    fn weighted_sum(&self, f: impl Fn(f64) -> f64) -> f64 {
        let m = self.num_blocks();
        let mut total = 0.0;
        for i in 0..m {
            let mut row = 0.0;
            for j in 0..m {
                row += self.weights[j] * f(self.values[i * m + j]);
            }
            total += self.weights[i] * row;
        }
        total
    }

    /// `Σ_i w_i W_ii`, the trace of the kernel operator restricted to block-constant functions.
    pub fn diagonal_mass(&self) -> f64 {
        (0..self.num_blocks())
            .map(|i| self.weights[i] * self.value(i, i))
            .sum()
    }

    /// Matrix of `T_W` on block-constant functions: `(B D)_ij = W_ij w_j`.
    pub fn operator_matrix(&self) -> Vec<f64> {
        let m = self.num_blocks();
        let mut out = self.values.clone();
        for i in 0..m {
            for j in 0..m {
                out[i * m + j] *= self.weights[j];
            }
        }
        out
    }

    /// Symmetric similarity transform `D^{1/2} B D^{1/2}` of the operator matrix.
    pub fn symmetric_matrix(&self) -> Vec<f64> {
        let m = self.num_blocks();
        let sq: Vec<f64> = self.weights.iter().map(|w| w.sqrt()).collect();
        let mut out = self.values.clone();
        for i in 0..m {
            for j in 0..m {
                out[i * m + j] *= sq[i] * sq[j];
            }
        }
        out
    }
}

/// Returns both graphons expressed on the overlay of their partitions.
///
/// Inputs that already share identical weights are returned unchanged.
pub fn common_refinement(u: &StepGraphon, w: &StepGraphon) -> (StepGraphon, StepGraphon) {
    if u.weights == w.weights {
        return (u.clone(), w.clone());
    }
    let fine = u.partition().overlay(&w.partition());
    // The overlay refines both partitions by construction.
    let ur = u.refine_to(&fine).expect("overlay refines left partition");
    let wr = w.refine_to(&fine).expect("overlay refines right partition");
    (ur, wr)
}

/// Finite undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for SimpleGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        SimpleGraph::new(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<SimpleGraph> for RawGraph {
    fn from(g: SimpleGraph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl SimpleGraph {
    /// Builds a graph; duplicate edges (in either orientation) collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Self { n, edges }
    }

    /// The cycle `C_k`, `k >= 3`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidGraph(format!("C_{k} is not a simple cycle")));
        }
        Self::new(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// The path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        Self {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Row-major 0/1 adjacency matrix.
    pub fn adjacency(&self) -> Vec<u8> {
        let mut a = vec![0u8; self.n * self.n];
        for &(i, j) in &self.edges {
            a[i * self.n + j] = 1;
            a[j * self.n + i] = 1;
        }
        a
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Parses either the JSON form `{"n":k,"edges":[[a,b],...]}` or the
    /// edge-list text form (header `n <k>`, then `a b` per line; `#` starts a comment).
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            return Ok(serde_json::from_str(text)?);
        }
        Self::parse_edge_list(text)
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: cannot parse {raw:?}", lineno + 1));
            match (n, fields.as_slice()) {
                (None, ["n", k]) => n = Some(k.parse::<usize>().map_err(|_| bad())?),
                (None, _) => {
                    return Err(Error::Parse(
                        "edge list must start with a header line `n <k>`".into(),
                    ))
                }
                (Some(_), [a, b]) => {
                    let a = a.parse::<usize>().map_err(|_| bad())?;
                    let b = b.parse::<usize>().map_err(|_| bad())?;
                    edges.push((a, b));
                }
                (Some(_), _) => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing header line `n <k>`".into()))?;
        Self::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }
}

/// The graphon `W_G`: `n` blocks of measure `1/n`, value 1 on edges and 0 elsewhere.
pub fn graph_to_graphon(g: &SimpleGraph) -> Result<StepGraphon> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::InvalidGraph("the graph has no vertices".into()));
    }
    let values = g.adjacency().into_iter().map(f64::from).collect();
    StepGraphon::from_flat(vec![1.0 / n as f64; n], values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_embedding() {
        let w = graph_to_graphon(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(w.weights(), &[0.5, 0.5]);
        assert_eq!(w.rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(w.l1_norm(), 0.5);
    }

    #[test]
    fn edgeless_and_triangle() {
        let e = graph_to_graphon(&SimpleGraph::empty(3)).unwrap();
        assert!(e.values().iter().all(|&v| v == 0.0));

        let k3 = graph_to_graphon(&SimpleGraph::complete(3)).unwrap();
        for (i, &w) in k3.weights().iter().enumerate() {
            assert!((w - 1.0 / 3.0).abs() < 1e-15);
            for j in 0..3 {
                assert_eq!(k3.value(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(graph_to_graphon(&SimpleGraph::empty(0)).is_err());
    }

    #[test]
    fn validation() {
        assert!(StepGraphon::new(vec![0.5, 0.4], vec![vec![0.0; 2]; 2]).is_err());
        assert!(StepGraphon::new(vec![1.0, 0.0], vec![vec![0.0; 2]; 2]).is_err());
        assert!(StepGraphon::new(vec![0.5, 0.5], vec![vec![0.0, 0.2], vec![0.3, 0.0]]).is_err());
        assert!(StepGraphon::constant(1.5).is_err());
        assert!(StepGraphon::constant(-1e-3).is_err());
        // tiny excursions are clamped
        assert_eq!(StepGraphon::constant(1.0 + 1e-14).unwrap().value(0, 0), 1.0);
        assert_eq!(StepGraphon::constant(-1e-14).unwrap().value(0, 0), 0.0);
        // weights within tolerance are renormalized
        let w = StepGraphon::from_flat(vec![0.5 + 4e-13, 0.5], vec![0.0; 4]).unwrap();
        assert!((w.weights().iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn norms_of_named_graphons() {
        let half = StepGraphon::constant(0.5).unwrap();
        let sq = StepGraphon::indicator_square(0.5).unwrap();
        assert_eq!(half.l1_norm(), 0.5);
        assert_eq!(half.l2_norm_sq(), 0.25);
        assert_eq!(sq.l1_norm(), 0.25);
        assert_eq!(sq.l2_norm_sq(), 0.25);
    }

    #[test]
    fn refinement_onto_common_partition() {
        let half = StepGraphon::constant(0.5).unwrap();
        let two = StepGraphon::from_flat(vec![0.5, 0.5], vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let (a, b) = common_refinement(&half, &two);
        assert_eq!(a.weights(), &[0.5, 0.5]);
        assert_eq!(a.values(), &[0.5; 4]);
        assert_eq!(b, two);

        let (c, d) = common_refinement(&two, &two);
        assert_eq!(c, two);
        assert_eq!(d, two);
    }

    #[test]
    fn thirds_against_halves() {
        let u = StepGraphon::from_flat(vec![1.0 / 3.0, 2.0 / 3.0], vec![0.1, 0.2, 0.2, 0.3]).unwrap();
        let w = StepGraphon::from_flat(vec![0.5, 0.5], vec![0.4, 0.5, 0.5, 0.6]).unwrap();
        let (a, b) = common_refinement(&u, &w);
        let expect = [1.0 / 3.0, 1.0 / 6.0, 0.5];
        assert_eq!(a.weights(), b.weights());
        for (x, y) in a.weights().iter().zip(expect) {
            assert!((x - y).abs() < 1e-15);
        }
        assert_eq!(a.value(0, 0), 0.1);
        assert_eq!(a.value(1, 2), 0.3);
        assert_eq!(b.value(0, 1), 0.4);
        assert_eq!(b.value(1, 2), 0.5);
    }

    #[test]
    fn locate_blocks() {
        let p = Partition::from_weights(&[0.25, 0.25, 0.5]);
        assert_eq!(p.locate(0.0), 0);
        assert_eq!(p.locate(0.2499), 0);
        assert_eq!(p.locate(0.25), 1);
        assert_eq!(p.locate(0.9), 2);
        assert_eq!(p.locate(1.0), 2);
        assert!(Partition::new(vec![0.0, 0.5, 0.5, 1.0]).is_err());
    }

    #[test]
    fn permutation() {
        let w = StepGraphon::from_flat(vec![0.25, 0.75], vec![1.0, 0.5, 0.5, 0.0]).unwrap();
        let p = w.permuted(&[1, 0]).unwrap();
        assert_eq!(p.weights(), &[0.75, 0.25]);
        assert_eq!(p.values(), &[0.0, 0.5, 0.5, 1.0]);
        assert!(w.permuted(&[0, 0]).is_err());
    }

    #[test]
    fn graph_formats() {
        let g = SimpleGraph::parse("n 4\n0 1\n# comment\n2 1\n\n3 0\n").unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        let again = SimpleGraph::parse(&g.to_edge_list()).unwrap();
        assert_eq!(again, g);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[0,1],[0,3],[1,2]]}"#);
        assert_eq!(SimpleGraph::parse(&json).unwrap(), g);

        assert!(SimpleGraph::parse("0 1\n").is_err());
        assert!(SimpleGraph::parse("n 2\n0 0\n").is_err());
        assert!(SimpleGraph::parse("n 2\n0 2\n").is_err());
        assert!(SimpleGraph::parse("n 2\n0 x\n").is_err());
    }

    #[test]
    fn graphon_json() {
        let w: StepGraphon =
            serde_json::from_str(r#"{"weights":[0.5,0.5],"values":[[1,0],[0,0]]}"#).unwrap();
        assert_eq!(w, StepGraphon::indicator_square(0.5).unwrap());
        let bad = serde_json::from_str::<StepGraphon>(r#"{"weights":[0.5,0.5],"values":[[1,0.1],[0,0]]}"#);
        assert!(bad.is_err());
    }
}
