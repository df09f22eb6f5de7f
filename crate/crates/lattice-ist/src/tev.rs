//! Inversion from transmission eigenvalues: rebuild the monic determinant,
//! split off the plus part, recover the edge value through the trace rule,
//! detect the unusual case, and delegate to a linear inverse method.

use crate::algebra::{lambda_to_laurent, LambdaPoly, LaurentPoly};
use crate::error::{Error, Result};
use crate::forward::{
    transmission_eigenvalues, Potential, SpectralData, TransmissionSpectrum,
};

/// Relative tolerance of the unusual-case detectors.
const UNUSUAL_TOL: f64 = 1e-7;
/// Gap below which the edge-value division is flagged as ill-conditioned.
const CONDITIONING_WARN: f64 = 1e-3;
/// Tolerance of the constant-coefficient residual in the plus/minus split.
const ZERO_COEFF_TOL: f64 = 1e-10;
/// Multiset tolerance of the final eigenvalue re-match.
const VERIFY_TOL: f64 = 1e-6;

/// Which linear inverse method finishes the reconstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseMethod {
    Marchenko,
    GelfandLevitan,
}

/// Outcome of an eigenvalue inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InversionStatus {
    /// The eigenvalues determined the potential uniquely.
    Unique,
    /// The eigenvalue sum sits at `4(b-1)`: the edge value drops out of the
    /// trace rule and the potential is under-determined.
    Unusual,
    /// The data contradicts itself; no real potential reproduces it.
    Inconsistent,
}

/// Numbers the caller needs to audit an inversion.
#[derive(Debug, Clone, Copy)]
pub struct InversionDiagnostics {
    /// Coefficient of `z` in the scaled Jost function `(f_0 - 1)/V_b`.
    pub k01_over_vb: f64,
    /// Sum of the input eigenvalues.
    pub eigenvalue_sum: f64,
    /// The degenerate value `4(b-1)` of that sum.
    pub usual_sum: f64,
    /// `|eigenvalue_sum - 4(b-1)|`, the distance to the unusual case.
    pub unusual_gap: f64,
}

/// Full report of an eigenvalue inversion.
#[derive(Debug, Clone)]
pub struct InversionReport {
    pub status: InversionStatus,
    pub potential: Option<Potential>,
    pub f0: Option<LaurentPoly>,
    pub diagnostics: InversionDiagnostics,
    pub warnings: Vec<String>,
}

/// Monic polynomial with the spectrum as its zero set: `Π (λ - λ_j)`.
///
/// Real roots contribute linear factors, conjugate pairs real quadratics, so
/// the coefficients are real by construction.
pub fn build_e(spectrum: &TransmissionSpectrum) -> LambdaPoly {
    let mut e = LambdaPoly::one();
    for root in spectrum.roots() {
        let loc = root.location;
        if loc.im == 0.0 {
            for _ in 0..root.multiplicity {
                e = e.mul(&LambdaPoly::linear_root(loc.re));
            }
        } else if loc.im > 0.0 {
            let quad = LambdaPoly::new(vec![loc.norm_sqr(), -2.0 * loc.re, 1.0]);
            for _ in 0..root.multiplicity {
                e = e.mul(&quad);
            }
        }
        // negative-imaginary roots are covered by their mirror partners
    }
    e
}

/// The scaled Jost polynomial `(f_0 - 1)/V_b`: the strictly positive powers
/// of `(z - 1/z) E(2 - z - 1/z)`.
///
/// The product is odd under `z -> 1/z`, so its constant coefficient must
/// vanish; a residual there means the eigenvalue data was inconsistent. The
/// top coefficient (of `z^{2b-1}`) equals 1 for monic `E`.
pub fn f0_scaled(e: &LambdaPoly) -> Result<LaurentPoly> {
    let image = lambda_to_laurent(e);
    let product = image.mul(&LaurentPoly::new(-1, vec![-1.0, 0.0, 1.0]));
    let c0 = product.zero_coeff();
    if c0.abs() > ZERO_COEFF_TOL * product.coeff_scale().max(1.0) {
        return Err(Error::ZeroCoefficientResidual { value: c0 });
    }
    let plus = product.plus_part();
    debug_assert_eq!(plus.hi(), e.degree().unwrap_or(0) as i64 + 1);
    Ok(plus)
}

/// Edge value `V_b` from the trace rule
/// `Σ λ_j = 4(b-1) + (K_{01}/V_b - 1) V_b`.
///
/// Fails with the unusual-case error when the divisor `K_{01}/V_b - 1`
/// vanishes within tolerance.
pub fn recover_vb(spectrum: &TransmissionSpectrum, k01_over_vb: f64) -> Result<f64> {
    let sum = spectrum.sum();
    let usual = 4.0 * (spectrum.b() as f64 - 1.0);
    if (k01_over_vb - 1.0).abs() <= UNUSUAL_TOL {
        return Err(Error::UnusualCase {
            sum,
            expected: usual,
        });
    }
    Ok((sum - usual) / (k01_over_vb - 1.0))
}

/// Invert a transmission spectrum into a potential.
///
/// Detects the unusual case by two equivalent criteria (the eigenvalue sum
/// against `4(b-1)`, and the `z`-coefficient of the scaled Jost polynomial
/// against 1); their disagreement, like a failed final re-match of the
/// eigenvalues, yields an `Inconsistent` report.
pub fn tev_invert(
    spectrum: &TransmissionSpectrum,
    method: InverseMethod,
) -> Result<InversionReport> {
    let b = spectrum.b();
    let e = build_e(spectrum);
    let scaled = f0_scaled(&e)?;
    let k01_over_vb = scaled.coeff(1);

    let sum = spectrum.sum();
    let usual = 4.0 * (b as f64 - 1.0);
    let gap = (sum - usual).abs();
    let diagnostics = InversionDiagnostics {
        k01_over_vb,
        eigenvalue_sum: sum,
        usual_sum: usual,
        unusual_gap: gap,
    };

    let by_sum = gap <= UNUSUAL_TOL * (1.0 + sum.abs());
    let by_coeff = (k01_over_vb - 1.0).abs() <= UNUSUAL_TOL;
    if by_sum != by_coeff {
        return Ok(InversionReport {
            status: InversionStatus::Inconsistent,
            potential: None,
            f0: None,
            diagnostics,
            warnings: vec![format!(
                "unusual-case detectors disagree: |Σλ - 4(b-1)| = {gap:.3e} vs |K01/Vb - 1| = {:.3e}",
                (k01_over_vb - 1.0).abs()
            )],
        });
    }
    if by_sum {
        return Ok(InversionReport {
            status: InversionStatus::Unusual,
            potential: None,
            f0: None,
            diagnostics,
            warnings: Vec::new(),
        });
    }

    let mut warnings = Vec::new();
    let divisor = (k01_over_vb - 1.0).abs();
    if divisor < CONDITIONING_WARN {
        warnings.push(format!(
            "edge value is ill-conditioned: |K01/Vb - 1| = {divisor:.3e} amplifies eigenvalue noise by its reciprocal"
        ));
    }

    let vb = (sum - usual) / (k01_over_vb - 1.0);
    let f0 = LaurentPoly::one().add(&scaled.scale(vb));
    if f0.hi() != 2 * b as i64 - 1 {
        let degree = f0.hi();
        return Ok(InversionReport {
            status: InversionStatus::Inconsistent,
            potential: None,
            f0: Some(f0),
            diagnostics,
            warnings: vec![format!(
                "reconstructed jost function has degree {degree}, expected {}",
                2 * b - 1
            )],
        });
    }

    // Delegate through the ungated pipelines; the authoritative verification
    // here is the eigenvalue re-match below, which tolerates the root-finding
    // noise the rebuilt jost function necessarily carries.
    let potential = match method {
        InverseMethod::Marchenko => crate::marchenko::marchenko_pipeline(&f0, b)?,
        InverseMethod::GelfandLevitan => {
            let data = SpectralData::from_jost(&f0, b)?;
            crate::gelfand_levitan::gl_pipeline(&data)?
        }
    };

    // final check: the recovered potential must reproduce the input multiset
    let recomputed = transmission_eigenvalues(&potential)?;
    let distance = spectrum.multiset_distance(&recomputed);
    let scale = 1.0 + spectrum.sum().abs();
    if distance > VERIFY_TOL * scale {
        return Ok(InversionReport {
            status: InversionStatus::Inconsistent,
            potential: None,
            f0: Some(f0),
            diagnostics,
            warnings: vec![format!(
                "recovered potential reproduces the eigenvalues only to {distance:.3e}"
            )],
        });
    }

    Ok(InversionReport {
        status: InversionStatus::Unique,
        potential: Some(potential),
        f0: Some(f0),
        diagnostics,
        warnings,
    })
}

/// The three-site family with `V_2 = -V_1`, enumerated from the two shape
/// parameters `(γ, ε) = (V_1² + V_1/V_3, V_1²/V_3)`.
#[derive(Debug, Clone)]
pub enum UnusualFamilyB3 {
    /// `(γ, ε) = (0, 0)`: the edge value is a free nonzero parameter.
    OneParameter,
    /// Finitely many members, one per admissible real root of
    /// `V_1³ - γ V_1 + ε = 0`.
    Finite(Vec<Potential>),
}

/// Enumerate the `b = 3`, `V_2 = -V_1` potentials sharing a transmission
/// spectrum described by `(γ, ε)`.
pub fn unusual_family_b3(gamma: f64, epsilon: f64) -> Result<UnusualFamilyB3> {
    if !gamma.is_finite() || !epsilon.is_finite() {
        return Err(Error::InvalidInput("family parameters must be finite".into()));
    }
    if gamma == 0.0 && epsilon == 0.0 {
        return Ok(UnusualFamilyB3::OneParameter);
    }
    let cubic = LambdaPoly::new(vec![epsilon, -gamma, 0.0, 1.0]);
    let roots = cubic.roots()?;
    let mut members = Vec::new();
    for (v1, _mult) in roots.real_roots() {
        if v1.abs() <= 1e-12 {
            continue; // V_1 = 0 forces γ = 0 and belongs to the free family
        }
        let v3 = if epsilon != 0.0 {
            v1 * v1 / epsilon
        } else {
            let denom = gamma - v1 * v1;
            if denom.abs() <= 1e-12 * (1.0 + gamma.abs()) {
                continue; // no finite edge value matches this root
            }
            v1 / denom
        };
        if !v3.is_finite() || v3.abs() <= 1e-12 {
            continue;
        }
        members.push(Potential::new(vec![v1, -v1, v3])?);
    }
    members.sort_by(|a, b| a.value(1).total_cmp(&b.value(1)));
    Ok(UnusualFamilyB3::Finite(members))
}
