//! Exact Jack/zonal polynomial machinery together with the closed-form
//! matrix averages they evaluate (Schur averages over Ginibre ensembles,
//! hypergeometric moments of characteristic polynomials, duality integrals,
//! power-sum averages), and seeded Monte-Carlo estimators that verify every
//! closed form against samples of the corresponding random-matrix ensemble.
//!
//! Layout:
//!
//! - [`partition`]: partitions, arm/leg/hook statistics, derived partitions,
//!   generalized Pochhammer symbols (all exact rationals).
//! - [`symfunc`]: sparse symmetric polynomials in the monomial basis, Schur
//!   polynomials, power sums, numeric evaluation on spectra.
//! - [`jack`]: Jack polynomials `P_kappa^(alpha)` via the eigenoperator
//!   recursion, the `C` normalization, principal specializations.
//! - [`hyper`]: hypergeometric functions of matrix argument, closed-form
//!   moment formulas, duality quadrature, rank-one-variance density.
//! - [`ensembles`]: seeded samplers for Ginibre / Haar / Wishart matrices and
//!   quaternion-structure utilities.
//! - [`verify`]: Monte-Carlo comparison reports pairing each closed form with
//!   an empirical estimate, plus the errata report.

pub mod ensembles;
pub mod hyper;
pub mod jack;
pub mod linalg;
pub mod partition;
pub mod quad;
pub mod rational;
pub mod symfunc;
pub mod verify;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("incomparable weights")]
    IncomparableWeights,
    #[error("cell ({0},{1}) outside diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("complement undefined")]
    ComplementUndefined,
    #[error("alpha must be positive")]
    NonPositiveAlpha,
    #[error("mismatched nvars: {0} vs {1}")]
    MismatchedNvars(usize, usize),
    #[error("spectrum length {0} does not match nvars {1}")]
    SpectrumLength(usize, usize),
    #[error("non-finite spectrum entry")]
    NonFiniteSpectrum,
    #[error("partition length {0} exceeds nvars {1}")]
    PartitionTooLong(usize, usize),
    #[error("ill-conditioned bialternant")]
    IllConditionedBialternant,
    #[error("degenerate eigenvalue")]
    DegenerateEigenvalue,
    #[error("b-parameter pole at partition {0}")]
    BParameterPole(String),
    #[error("quadrature dimension cap")]
    QuadratureDimensionCap,
    #[error("unsupported alpha for quadrature: {0}")]
    UnsupportedQuadratureAlpha(String),
    #[error("sigma is not positive definite")]
    SigmaNotPositiveDefinite,
    #[error("no matrix model for a")]
    NoMatrixModel,
    #[error("quaternion structure violated (deviation {0:.3e})")]
    QuaternionStructure(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("identity check failed: {0}")]
    IdentityCheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
