use thiserror::Error;

use crate::cospectral::DiscriminationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid step graphon: {0}")]
    InvalidGraphon(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// An exhaustive enumeration would exceed its configured ceiling.
    #[error("{what}: size {size} exceeds the enumeration bound {bound}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        bound: u128,
    },

    #[error("symmetric eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    /// Eigenvalue clustering chained values further apart than the group tolerance.
    #[error("eigenvalue grouping is ambiguous: cluster spans {span:e} > group_tol {group_tol:e}")]
    AmbiguousGrouping { span: f64, group_tol: f64 },

    #[error("spectra differ (nu = {}, parity = {}, witness k = {})", .0.nu, .0.parity, .0.witness_k)]
    SpectraMismatch(Box<DiscriminationReport>),

    #[error("eigenvalue group {value} has multiplicity {left} vs {right}")]
    MultiplicityMismatch { value: f64, left: usize, right: usize },

    #[error("spectra are equal within tolerance: nothing to discriminate")]
    NothingToDiscriminate,

    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    /// True for errors caused by caller input or unmet preconditions, as
    /// opposed to failures inside a computation.
    pub fn is_refusal(&self) -> bool {
        !matches!(
            self,
            Error::NoConvergence { .. } | Error::AmbiguousGrouping { .. }
        )
    }
}
