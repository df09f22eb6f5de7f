//! Everything computed from a known potential: the Jost coefficient table
//! and Jost function, scattering matrix, regular solutions, bound states
//! with both norming constants, endpoint classification, and the
//! transmission determinant with its eigenvalues.

mod bound;
mod jost;
mod regular;
mod transmission;

pub use bound::{
    bound_states, bound_states_from_jost, classify_endpoint, z_from_lambda, BoundState,
    Endpoint, EndpointClass, SpectralData,
};
pub use jost::{g_from_f, jost_function, jost_table, KTable, ScatteringMatrix};
pub use regular::{a_coefficients, free_regular, free_regulars, regular_solutions, ATable};
pub use transmission::{
    transmission_det, transmission_eigenvalues, TransmissionDet, TransmissionSpectrum,
};

use crate::error::{Error, Result};

/// Margin keeping bound-state roots away from the origin.
pub(crate) const BOUND_MARGIN: f64 = 1e-9;
/// Half-width of the exclusion window around `|z| = 1`.
pub(crate) const UNIT_WINDOW: f64 = 1e-7;
/// Below this magnitude the last potential value counts as zero.
pub(crate) const EDGE_VALUE_MIN: f64 = 1e-12;
/// Relative tolerance for endpoint (z = ±1) vanishing.
pub(crate) const ENDPOINT_TOL: f64 = 1e-9;
/// Relative remainder tolerance for the exact division by `z - 1/z`.
pub(crate) const DIVISION_REMAINDER_TOL: f64 = 1e-10;
/// Relative agreement required between the two transmission-determinant routes.
pub(crate) const ROUTE_AGREEMENT_TOL: f64 = 1e-10;
/// Relative tolerance on the eigenvalue sum rule.
pub(crate) const SUM_RULE_TOL: f64 = 1e-8;
/// Relative agreement required between the two norming-constant routes.
pub(crate) const NORMING_AGREEMENT_TOL: f64 = 1e-8;

/// Real potential supported on the lattice sites `1..=b`.
///
/// The stored length fixes `b`; values beyond the support are identically
/// zero. The last stored value is allowed to be zero — operations that need
/// `V_b != 0` check for it explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct Potential {
    values: Vec<f64>,
}

impl Potential {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput(
                "potential needs at least one site (b >= 1 required)".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(
                "potential values must be finite".into(),
            ));
        }
        Ok(Potential { values })
    }

    /// Support length `b`.
    pub fn b(&self) -> usize {
        self.values.len()
    }

    /// Value at the 1-based site `n`; zero beyond the support.
    pub fn value(&self, n: usize) -> f64 {
        if n == 0 {
            return 0.0;
        }
        self.values.get(n - 1).copied().unwrap_or(0.0)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Last stored value `V_b`.
    pub fn edge_value(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// Error unless `|V_b|` clears the zero threshold.
    pub fn require_nonzero_edge(&self) -> Result<f64> {
        let v = self.edge_value();
        if v.abs() <= EDGE_VALUE_MIN {
            Err(Error::EdgePotentialZero { value: v })
        } else {
            Ok(v)
        }
    }

    /// Sum `V_1 + ... + V_{b-1}` of the interior values.
    pub fn interior_sum(&self) -> f64 {
        self.values[..self.values.len() - 1].iter().sum()
    }

    /// Maximum absolute difference against `other`, padding the shorter
    /// support with zeros.
    pub fn max_gap(&self, other: &Potential) -> f64 {
        let len = self.values.len().max(other.values.len());
        (1..=len)
            .map(|n| (self.value(n) - other.value(n)).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_accessors() {
        let v = Potential::new(vec![1.5, -0.5]).unwrap();
        assert_eq!(v.b(), 2);
        assert_eq!(v.value(1), 1.5);
        assert_eq!(v.value(2), -0.5);
        assert_eq!(v.value(3), 0.0);
        assert_eq!(v.value(0), 0.0);
        assert_eq!(v.edge_value(), -0.5);
        assert_eq!(v.interior_sum(), 1.5);
    }

    #[test]
    fn rejects_empty_and_nonfinite() {
        assert!(Potential::new(vec![]).is_err());
        assert!(Potential::new(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn zero_edge_is_flagged() {
        let v = Potential::new(vec![1.0, 0.0]).unwrap();
        assert!(matches!(
            v.require_nonzero_edge(),
            Err(Error::EdgePotentialZero { .. })
        ));
    }
}
