//! Crate-wide error type.

use num_complex::Complex64;

/// Errors produced by the spectral pipelines.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A Laurent polynomial expected to be symmetric under `z -> 1/z` is not.
    #[error("laurent polynomial is not palindromic (asymmetry {asymmetry:.3e} on scale {scale:.3e})")]
    NotPalindromic { asymmetry: f64, scale: f64 },

    /// Reciprocal Taylor expansion requested for a polynomial vanishing at `z = 0`.
    #[error("polynomial is singular at the origin (constant term {value:.3e})")]
    SingularAtOrigin { value: f64 },

    /// The simultaneous root iteration hit its iteration cap.
    #[error("root finding did not converge within {iterations} iterations")]
    DidNotConverge { iterations: usize },

    /// A zero of the Jost function landed inside the exclusion window around `|z| = 1`,
    /// too close to call it either a bound state or a unit-circle zero.
    #[error("root z = {z:.12e} lies within {window:.1e} of the unit circle; bound-state classification refused")]
    RootToleranceConflict { z: f64, window: f64 },

    /// A zero of the Jost function strictly inside the unit disc came out complex,
    /// which no real finitely supported potential can produce.
    #[error("jost function has a complex zero {z} strictly inside the unit disc")]
    ComplexRootInDisc { z: Complex64 },

    /// A bound-state zero of the Jost function was found with multiplicity above one.
    #[error("bound-state zero at z = {z:.12e} is not simple (multiplicity {multiplicity})")]
    BoundStateNotSimple { z: f64, multiplicity: usize },

    /// A squared norming constant came out non-positive; the input is not a Jost function.
    #[error("squared norming constant at z = {z:.12e} is {value:.3e}; input is not a valid jost function")]
    InvalidNormingConstant { z: f64, value: f64 },

    /// Exact Laurent division by `z - 1/z` left a remainder above tolerance.
    #[error("laurent division by (z - 1/z) left remainder {remainder:.3e} on scale {scale:.3e}")]
    DivisionRemainder { remainder: f64, scale: f64 },

    /// The two independent routes to the transmission determinant disagree.
    #[error("transmission determinant routes disagree by {gap:.3e} on scale {scale:.3e}")]
    RouteMismatch { gap: f64, scale: f64 },

    /// An operation required the last potential value to be nonzero.
    #[error("last potential value V_b = {value:.3e} is zero within tolerance; operation undefined")]
    EdgePotentialZero { value: f64 },

    /// A linear system row produced a pivot below the singularity threshold.
    #[error("linear system is singular at row {row} (pivot {pivot:.3e})")]
    SingularSystem { row: usize, pivot: f64 },

    /// An eigenvalue multiset could not be closed under conjugation.
    #[error("eigenvalue list is not closed under complex conjugation (worst unpaired gap {gap:.3e})")]
    NotConjugateClosed { gap: f64 },

    /// Transmission eigenvalue multisets must have even cardinality.
    #[error("transmission eigenvalue list has odd or insufficient length {count}; an even count of at least 2 is required")]
    OddCount { count: usize },

    /// The reconstructed product `(z - 1/z) E` kept a nonzero constant term.
    #[error("constant coefficient {value:.3e} of (z - 1/z)E exceeds tolerance; eigenvalue data is inconsistent")]
    ZeroCoefficientResidual { value: f64 },

    /// The eigenvalue sum sits at the degenerate point where the edge value drops out.
    #[error("unusual case: eigenvalue sum {sum:.12e} equals 4(b-1) = {expected:.12e} within tolerance; edge value undetermined")]
    UnusualCase { sum: f64, expected: f64 },

    /// An inversion reproduced data that fails to match its input.
    #[error("inverted potential does not reproduce its input data (max deviation {deviation:.3e})")]
    ReconstructionMismatch { deviation: f64 },

    /// Input data malformed at the level of shapes, counts, or finiteness.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by malformed input data rather than by a
    /// failure inside a numerical pipeline. The command-line front end maps
    /// these to the schema-violation exit code.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::OddCount { .. } | Error::NotConjugateClosed { .. }
        )
    }
}
