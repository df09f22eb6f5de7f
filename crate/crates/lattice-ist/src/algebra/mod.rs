//! Polynomial infrastructure shared by every pipeline: real polynomials in
//! the spectral parameter `λ`, Laurent polynomials in `z`, the substitution
//! `λ = 2 - z - 1/z` and its inverse, reciprocal Taylor series, and root
//! finding with multiplicity clustering.

mod lambda;
mod laurent;
mod roots;

pub use lambda::LambdaPoly;
pub use laurent::{lambda_to_laurent, laurent_to_lambda, reciprocal_series, LaurentPoly};
pub use roots::{find_roots, Root, RootSet};

/// Relative threshold for trimming negligible boundary coefficients.
pub(crate) const TRIM_REL: f64 = 1e-12;
/// Relative tolerance for the palindromy check in `laurent_to_lambda`.
pub(crate) const PALINDROME_TOL: f64 = 1e-9;
/// Relative radius of root-multiplicity clustering.
pub(crate) const ROOT_CLUSTER_TOL: f64 = 1e-7;
/// Iteration cap for the simultaneous root iteration.
pub(crate) const ABERTH_MAX_ITER: usize = 200;
