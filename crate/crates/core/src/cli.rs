//! Command-line front end. Every command prints one JSON document on stdout;
//! diagnostics go to stderr.
//!
//! Exit codes: 0 on success, 2 when input or preconditions are rejected,
//! 1 when a computation fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cospectral::{discriminate_with_tol, theorem42_demo, DEMO_SIZES};
use crate::cut::{cut_norm_exact, SearchStrategy};
use crate::densities::{cycle_density_spectral, cycle_profile, density_direct, DEFAULT_K_MAX};
use crate::error::{Error, Result};
use crate::graphon::{SimpleGraph, StepGraphon};
use crate::sampling::{convergence_report, sample_graph, SampleSpec};
use crate::spectral::{
    build_intertwiner, decompose, decompose_default, spectra_equal, DEFAULT_GROUP_TOL,
    DEFAULT_MATCH_TOL, DEFAULT_ZERO_TOL,
};

#[derive(Debug, Parser)]
#[command(name = "graphon", version, about = "Spectral analysis of step graphons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Nonzero spectrum of the kernel operator.
    Spectrum {
        graphon: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ZERO_TOL)]
        zero_tol: f64,
        #[arg(long, default_value_t = DEFAULT_GROUP_TOL)]
        group_tol: f64,
    },
    /// Cycle densities t(C_k, W) for k = 3..=kmax.
    Cycles {
        graphon: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
    /// Cospectrality verdict with an intertwiner or a discrimination report.
    Cospectral {
        u: PathBuf,
        w: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MATCH_TOL)]
        tol: f64,
    },
    /// Exact cut norm of u - w with a maximizing pair of block sets.
    Cutnorm { u: PathBuf, w: PathBuf },
    /// Cut-distance upper bound over block permutations.
    Cutdist {
        u: PathBuf,
        w: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Greedy)]
        strategy: Strategy,
    },
    /// Draw a W-random graph.
    Sample {
        graphon: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the sample as an edge-list file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Norms, leading eigenvalues and mean gap of W-random samples of growing size.
    Converge {
        graphon: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = vec![50usize, 100, 200])]
        n: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Constant-1/2 versus half-square: cospectral targets, non-cospectral samples.
    #[command(name = "demo-theorem42")]
    DemoTheorem42 {
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Homomorphism density t(F, W) by exact block enumeration.
    Density { pattern: PathBuf, graphon: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Exhaustive,
    Greedy,
}

impl From<Strategy> for SearchStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Exhaustive => SearchStrategy::Exhaustive,
            Strategy::Greedy => SearchStrategy::Greedy,
        }
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn read_graphon(path: &Path) -> Result<StepGraphon> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn read_graph(path: &Path) -> Result<SimpleGraph> {
    SimpleGraph::parse(&std::fs::read_to_string(path)?)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

fn check_tol(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("--{name} must be positive, got {v}")))
    }
}

/// Runs one command; returns (exit code, stdout document). `Err` bubbles up as a failure.
fn execute(cmd: Command, stderr: &mut String) -> Result<(i32, String)> {
    match cmd {
        Command::Spectrum {
            graphon,
            zero_tol,
            group_tol,
        } => {
            check_tol("zero-tol", zero_tol)?;
            check_tol("group-tol", group_tol)?;
            let w = read_graphon(&graphon)?;
            let d = decompose(&w, zero_tol, group_tol)?;
            Ok((0, to_json(&d.spectrum)?))
        }
        Command::Cycles { graphon, kmax } => {
            if kmax < 3 {
                return Err(Error::InvalidArgument(format!("--kmax must be >= 3, got {kmax}")));
            }
            let w = read_graphon(&graphon)?;
            Ok((0, to_json(&cycle_profile(&w, kmax)?)?))
        }
        Command::Cospectral { u, w, tol } => {
            check_tol("tol", tol)?;
            let (u, w) = (read_graphon(&u)?, read_graphon(&w)?);
            let su = decompose_default(&u)?.spectrum;
            let sw = decompose_default(&w)?.spectrum;
            let doc = if spectra_equal(&su, &sw, tol) {
                let t = build_intertwiner(&u, &w, tol)?;
                json!({
                    "cospectral": true,
                    "tol": tol,
                    "spectrum": su,
                    "intertwiner": {
                        "dim": t.dim(),
                        "unitarity_residual": t.unitarity_residual(),
                        "intertwining_residual": t.intertwining_residual(&u, &w)?,
                        "weights": t.weights,
                        "matrix": t.matrix,
                    },
                })
            } else {
                let r = discriminate_with_tol(&u, &w, tol)?;
                let k = r.witness_k;
                let gap = cycle_density_spectral(k, &su)? - cycle_density_spectral(k, &sw)?;
                json!({
                    "cospectral": false,
                    "tol": tol,
                    "spectrum_u": su,
                    "spectrum_w": sw,
                    "discrimination": r,
                    "witness_gap": gap,
                    "witness_gap_lower_bound": r.gap_lower_bound(k),
                })
            };
            Ok((0, to_json(&doc)?))
        }
        Command::Cutnorm { u, w } => {
            let (u, w) = (read_graphon(&u)?, read_graphon(&w)?);
            Ok((0, to_json(&cut_norm_exact(&u, &w)?)?))
        }
        Command::Cutdist { u, w, strategy } => {
            let (u, w) = (read_graphon(&u)?, read_graphon(&w)?);
            let upper = crate::cut::cut_distance_upper(&u, &w, strategy.into())?;
            let lower = crate::cut::mean_gap_lower_bound(&u, &w);
            Ok((0, to_json(&json!({ "lower": lower, "upper": upper }))?))
        }
        Command::Sample {
            graphon,
            n,
            seed,
            out,
        } => {
            let w = read_graphon(&graphon)?;
            let g = sample_graph(&SampleSpec::new(w, n, seed)?);
            if let Some(path) = out {
                std::fs::write(&path, g.to_edge_list())?;
                let _ = writeln!(stderr, "wrote edge list to {}", path.display());
            }
            Ok((0, to_json(&g)?))
        }
        Command::Converge { graphon, n, seed } => {
            let w = read_graphon(&graphon)?;
            Ok((0, to_json(&convergence_report(&w, &n, seed)?)?))
        }
        Command::DemoTheorem42 { seeds, sizes } => {
            let seeds = seeds.unwrap_or_else(|| (0..20).collect());
            let sizes = sizes.unwrap_or_else(|| DEMO_SIZES.to_vec());
            if sizes.contains(&0) {
                return Err(Error::InvalidArgument("--sizes must be positive".into()));
            }
            let report = theorem42_demo(&sizes, &seeds)?;
            if !report.all_pass {
                let _ = writeln!(
                    stderr,
                    "{} of {} sampled pairs did not clear the threshold {}",
                    report.failures,
                    report.trials.len(),
                    report.threshold
                );
            }
            Ok((if report.all_pass { 0 } else { 1 }, to_json(&report)?))
        }
        Command::Density { pattern, graphon } => {
            let f = read_graph(&pattern)?;
            let w = read_graphon(&graphon)?;
            let t = density_direct(&f, &w)?;
            Ok((0, to_json(&json!({ "density": t }))?))
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Output::default();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                out.stdout = rendered;
            } else {
                out.stderr = rendered;
                out.code = 2;
            }
            return out;
        }
    };
    match execute(cli.command, &mut out.stderr) {
        Ok((code, stdout)) => {
            out.code = code;
            out.stdout = stdout;
        }
        Err(e) => {
            let _ = writeln!(out.stderr, "error: {e}");
            out.code = if e.is_refusal() { 2 } else { 1 };
        }
    }
    out
}
