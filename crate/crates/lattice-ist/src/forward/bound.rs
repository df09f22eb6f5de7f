//! Bound states, norming constants, and endpoint classification.
//!
//! Bound states sit at the real zeros of the Jost function strictly inside
//! the unit disc (excluding the origin). Each zero is simple; the Marchenko
//! norming constant normalises the Jost solution there and the
//! Gel'fand–Levitan constant normalises the regular solution, the two
//! related by `c = |g_0 / (z - 1/z)| C` at the bound state.

use num_complex::Complex64;

use super::jost::{g_from_f, jost_table};
use super::regular::regular_solutions;
use super::{Potential, BOUND_MARGIN, ENDPOINT_TOL, NORMING_AGREEMENT_TOL, UNIT_WINDOW};
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};

/// One bound state of the half-line operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    /// Location in the `z`-parameter, real in `(-1,0) ∪ (0,1)`.
    pub z: f64,
    /// Energy `μ = 2 - z - 1/z`, in `(-∞,0) ∪ (4,∞)`.
    pub mu: f64,
    /// Marchenko norming constant (normalises the Jost solution).
    pub marchenko_norming: f64,
    /// Gel'fand–Levitan norming constant (normalises the regular solution).
    pub gl_norming: f64,
}

/// A Jost function together with its bound-state data: the input to both
/// linear inverse methods.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub f0: LaurentPoly,
    pub bound_states: Vec<BoundState>,
    pub b: usize,
}

impl SpectralData {
    /// Derive the full spectral data from a Jost function alone.
    ///
    /// Works without the potential: norming constants come from the residue
    /// of `S/z` at each bound-state pole of the scattering matrix.
    pub fn from_jost(f0: &LaurentPoly, b: usize) -> Result<Self> {
        validate_jost(f0, b)?;
        let bound_states = bound_states_from_jost(f0)?;
        Ok(SpectralData {
            f0: f0.clone(),
            bound_states,
            b,
        })
    }

    /// Forward construction from a potential, with the summation and residue
    /// routes for the norming constants cross-checked against each other.
    pub fn from_potential(v: &Potential) -> Result<Self> {
        let f0 = super::jost::jost_function(v);
        let bound_states = bound_states(&f0, v)?;
        Ok(SpectralData {
            f0,
            bound_states,
            b: v.b(),
        })
    }
}

fn validate_jost(f0: &LaurentPoly, b: usize) -> Result<()> {
    if b == 0 {
        return Err(Error::InvalidInput("b >= 1 required".into()));
    }
    if f0.lo() != 0 || (f0.coeff(0) - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidInput(
            "jost function must be a polynomial in z with constant term 1".into(),
        ));
    }
    if f0.hi() > 2 * b as i64 - 1 {
        return Err(Error::InvalidInput(format!(
            "jost function degree {} exceeds 2b-1 = {}",
            f0.hi(),
            2 * b - 1
        )));
    }
    Ok(())
}

/// Classify the zeros of a Jost function against the unit circle.
///
/// Returns `(inside real roots, saw a root inside the exclusion window)`.
fn partition_roots(f0: &LaurentPoly) -> Result<Vec<(f64, usize)>> {
    if f0.hi() == 0 {
        return Ok(Vec::new()); // free Jost function, no zeros at all
    }
    let roots = f0.roots()?;
    let mut inside = Vec::new();
    for r in &roots.roots {
        let dist = (r.location.norm() - 1.0).abs();
        if dist < UNIT_WINDOW {
            if r.location.im == 0.0 {
                let endpoint_gap = (r.location.re - 1.0)
                    .abs()
                    .min((r.location.re + 1.0).abs());
                if endpoint_gap <= BOUND_MARGIN {
                    // a zero sitting at z = ±1 itself: the exceptional
                    // case, never a bound state
                    continue;
                }
                return Err(Error::RootToleranceConflict {
                    z: r.location.re,
                    window: UNIT_WINDOW,
                });
            }
            continue; // complex zeros on the circle are legitimate
        }
        if r.location.norm() < 1.0 {
            if r.location.im != 0.0 {
                return Err(Error::ComplexRootInDisc { z: r.location });
            }
            if r.location.re.abs() <= BOUND_MARGIN {
                continue; // inside the origin margin; not a bound state
            }
            if r.multiplicity > 1 {
                return Err(Error::BoundStateNotSimple {
                    z: r.location.re,
                    multiplicity: r.multiplicity,
                });
            }
            inside.push((r.location.re, r.multiplicity));
        }
    }
    inside.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(inside)
}

/// Bound states from a Jost function alone, norming constants by the
/// residue of `S/z` at each pole:
/// `c² = g_0(z_s) / (z_s ḟ_0(z_s))` and `C = c / |g_0(z_s)/(z_s - 1/z_s)|`.
pub fn bound_states_from_jost(f0: &LaurentPoly) -> Result<Vec<BoundState>> {
    let g0 = g_from_f(f0);
    let df0 = f0.derivative();
    let mut out = Vec::new();
    for (z, _) in partition_roots(f0)? {
        let g = g0.eval_real(z);
        let c_sq = g / (z * df0.eval_real(z));
        if !(c_sq.is_finite() && c_sq > 0.0) {
            return Err(Error::InvalidNormingConstant { z, value: c_sq });
        }
        let c = c_sq.sqrt();
        let kappa = g / (z - 1.0 / z);
        out.push(BoundState {
            z,
            mu: 2.0 - z - 1.0 / z,
            marchenko_norming: c,
            gl_norming: c / kappa.abs(),
        });
    }
    Ok(out)
}

/// Bound states with both norming constants computed from the potential.
///
/// The Marchenko constant uses the exact norm of the Jost solution: the
/// finitely many rows below the support plus the geometric tail
/// `z^{2b}/(1-z²)`. It is cross-checked against the residue route, and the
/// Gel'fand–Levitan constant likewise uses the regular-solution norm with a
/// geometric tail.
pub fn bound_states(f0: &LaurentPoly, v: &Potential) -> Result<Vec<BoundState>> {
    let b = v.b();
    let table = jost_table(v);
    let g0 = g_from_f(f0);
    let df0 = f0.derivative();
    let phi = regular_solutions(v, b.max(1));
    let residue_route = bound_states_from_jost(f0)?;

    let mut out = Vec::new();
    for bs in residue_route {
        let z = bs.z;
        let zc = Complex64::new(z, 0.0);
        let tail = z.powi(2 * b as i32) / (1.0 - z * z);

        // ‖f‖²: rows 1..b-1 explicitly, then the geometric tail.
        let mut jost_norm_sq = tail;
        for n in 1..b {
            let fn_z = table.jost_eval(n, zc).re;
            jost_norm_sq += fn_z * fn_z;
        }
        let c = jost_norm_sq.recip().sqrt();
        let gap = (c - bs.marchenko_norming).abs();
        if gap > NORMING_AGREEMENT_TOL * c.abs().max(1.0) {
            return Err(Error::RouteMismatch {
                gap,
                scale: c.abs(),
            });
        }

        // ‖φ‖² at μ: explicit sum below the support plus κ² times the tail,
        // where κ = g_0(z)/(z - 1/z) links the two solutions there.
        let mu = 2.0 - z - 1.0 / z;
        let kappa = g0.eval_real(z) / (z - 1.0 / z);
        let mut regular_norm_sq = kappa * kappa * tail;
        for n in 1..b {
            let p = phi[n].eval(mu);
            regular_norm_sq += p * p;
        }
        let cap_c = regular_norm_sq.recip().sqrt();

        // simplicity in z, guaranteed analytically, asserted numerically
        debug_assert!(df0.eval_real(z).abs() > 1e-8);

        out.push(BoundState {
            z,
            mu,
            marchenko_norming: c,
            gl_norming: cap_c,
        });
    }
    Ok(out)
}

/// Which endpoint of the continuous spectrum, as a point on the `z`-circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    /// `z = +1`, the bottom edge `λ = 0`.
    PlusOne,
    /// `z = -1`, the top edge `λ = 4`.
    MinusOne,
}

impl Endpoint {
    pub fn z(self) -> f64 {
        match self {
            Endpoint::PlusOne => 1.0,
            Endpoint::MinusOne => -1.0,
        }
    }
}

/// Behaviour of the regular solution at a spectral endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointClass {
    /// The regular solution grows linearly there.
    Generic,
    /// The Jost function vanishes (necessarily simply) and the regular
    /// solution stays bounded.
    Exceptional,
}

/// Endpoint classification: exceptional iff the Jost function vanishes at
/// the endpoint relative to its coefficient scale.
pub fn classify_endpoint(f0: &LaurentPoly, end: Endpoint) -> EndpointClass {
    let scale = f0.coeff_scale().max(1e-300);
    if f0.eval_real(end.z()).abs() < ENDPOINT_TOL * scale {
        EndpointClass::Exceptional
    } else {
        EndpointClass::Generic
    }
}

/// Map a real energy to its `z`-parameter with `|z| <= 1`, taking the upper
/// semicircle for energies inside the band `[0, 4]`.
pub fn z_from_lambda(lambda: f64) -> Complex64 {
    let half = 1.0 - lambda / 2.0; // (z + 1/z)/2
    if (0.0..=4.0).contains(&lambda) {
        let im = (lambda * (4.0 - lambda)).max(0.0).sqrt() / 2.0;
        Complex64::new(half, im)
    } else {
        let root = (half * half - 1.0).max(0.0).sqrt();
        let z = if half > 0.0 { half - root } else { half + root };
        Complex64::new(z, 0.0)
    }
}
