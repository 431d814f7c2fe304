//! Exact spectral and homomorphism-density analysis of step graphons.
//!
//! Everything operates on [`StepGraphon`]s: symmetric block-constant functions
//! on `[0,1]²`. The crate computes kernel-operator spectra, cycle and general
//! homomorphism densities, cut norms, W-random graph samples, and decides
//! cospectrality three ways (spectra, cycle profiles, explicit intertwiners).

pub mod cli;
pub mod cospectral;
pub mod cut;
pub mod densities;
pub mod eigen;
pub mod error;
pub mod graphon;
pub mod sampling;
pub mod spectral;

pub use cospectral::{
    discriminate, inapprox_check, is_cospectral, profiles_match, theorem42_demo,
    verify_gap_formula, DiscriminationReport, InapproxCertificate, Theorem42Report,
};
pub use cut::{
    cut_distance_upper, cut_norm_exact, mean_gap_lower_bound, CutNormCertificate, SearchStrategy,
};
pub use densities::{
    cycle_density_spectral, cycle_profile, density_direct, graph_density_consistency, hom_count,
    CycleProfile,
};
pub use error::{Error, Result};
pub use graphon::{common_refinement, graph_to_graphon, Partition, SimpleGraph, StepGraphon};
pub use sampling::{convergence_report, sample_graph, ConvergenceReport, SampleSpec};
pub use spectral::{
    build_intertwiner, decompose, parseval_residual, spectra_equal, Intertwiner,
    SpectralDecomposition, Spectrum,
};
