//! Spectral theory of the half-line discrete Schrödinger operator
//! `-ψ_{n+1} + 2ψ_n - ψ_{n-1} + V_n ψ_n = λ ψ_n` with Dirichlet data
//! `ψ_0 = 0` and a real potential supported on finitely many sites.
//!
//! The forward direction computes the whole spectral picture of a given
//! potential: the Jost function and its coefficient table, the scattering
//! matrix, bound states with both norming constants, endpoint
//! classification, and the transmission determinant with its `2b - 2`
//! eigenvalues. The inverse direction recovers the potential by three
//! routes:
//!
//! - [`marchenko::marchenko_invert`] — from the Jost function through the
//!   Marchenko linear system;
//! - [`gelfand_levitan::gl_invert`] — from the spectral measure through the
//!   Gel'fand–Levitan linear system;
//! - [`tev::tev_invert`] — from transmission eigenvalues, reconstructing the
//!   Jost function first and delegating to either method, with detection of
//!   the unusual case in which the eigenvalue sum equals `4(b - 1)` and the
//!   potential is under-determined.
//!
//! The `examples/` directory walks through each capability; the `lattice-ist`
//! binary wraps the same pipelines in JSON-in/JSON-out subcommands.
//!
//! ```
//! use lattice_ist::forward::{transmission_eigenvalues, Potential};
//! use lattice_ist::tev::{tev_invert, InverseMethod, InversionStatus};
//!
//! let v = Potential::new(vec![1.5, -0.5])?;
//! let spectrum = transmission_eigenvalues(&v)?;
//! assert_eq!(spectrum.count(), 2);
//!
//! let report = tev_invert(&spectrum, InverseMethod::Marchenko)?;
//! assert_eq!(report.status, InversionStatus::Unique);
//! assert!(report.potential.unwrap().max_gap(&v) < 1e-9);
//! # Ok::<(), lattice_ist::Error>(())
//! ```

// recurrences and triangular systems read best with explicit site indices
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod forward;
pub mod gelfand_levitan;
pub mod golden;
pub mod marchenko;
pub mod quad;
pub mod report;
pub mod tev;

pub(crate) mod dd;
pub(crate) mod linsolve;

pub use algebra::{LambdaPoly, LaurentPoly, Root, RootSet};
pub use error::{Error, Result};
pub use forward::{BoundState, Potential, SpectralData, TransmissionSpectrum};
pub use tev::{InverseMethod, InversionReport, InversionStatus};
