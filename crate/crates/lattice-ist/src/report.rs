//! JSON documents consumed and produced by the command-line front end.
//!
//! Input kinds: `potential`, `spectrum`, `jost`, `gl_data`. All numbers are
//! finite doubles; output serialisation prints every double with 17
//! significant digits so that emitted documents re-ingest losslessly.

use std::collections::BTreeMap;
use std::io;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forward::{
    bound_states, classify_endpoint, jost_function, transmission_det,
    transmission_eigenvalues, Endpoint, EndpointClass, Potential, SpectralData,
    TransmissionSpectrum,
};
use crate::gelfand_levitan::{gl_invert, gl_kernel, gl_solve, KernelRoute};
use crate::marchenko::{marchenko_invert, marchenko_kernel, marchenko_solve};
use crate::tev::{
    tev_invert, InverseMethod, InversionReport, InversionStatus, UnusualFamilyB3,
};

/// One bound state inside a `gl_data` document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundStateDoc {
    pub z: f64,
    #[serde(rename = "C")]
    pub c: f64,
}

/// A problem document, dispatched on its `kind` field.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ProblemDocument {
    #[serde(rename = "potential")]
    Potential {
        #[serde(rename = "V")]
        v: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<BTreeMap<String, String>>,
    },
    #[serde(rename = "spectrum")]
    Spectrum {
        eigs: Vec<[f64; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<BTreeMap<String, String>>,
    },
    #[serde(rename = "jost")]
    Jost {
        f0: Vec<f64>,
        b: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<BTreeMap<String, String>>,
    },
    #[serde(rename = "gl_data")]
    GlData {
        f0: Vec<f64>,
        b: usize,
        bound_states: Vec<BoundStateDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<BTreeMap<String, String>>,
    },
}

impl ProblemDocument {
    /// Parse a document from JSON text, enforcing finiteness of payload
    /// numbers.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: ProblemDocument = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("malformed document: {e}")))?;
        doc.check_finite()?;
        Ok(doc)
    }

    fn check_finite(&self) -> Result<()> {
        let ok = match self {
            ProblemDocument::Potential { v, .. } => v.iter().all(|x| x.is_finite()),
            ProblemDocument::Spectrum { eigs, .. } => eigs
                .iter()
                .all(|p| p[0].is_finite() && p[1].is_finite()),
            ProblemDocument::Jost { f0, .. } => f0.iter().all(|x| x.is_finite()),
            ProblemDocument::GlData {
                f0, bound_states, ..
            } => {
                f0.iter().all(|x| x.is_finite())
                    && bound_states
                        .iter()
                        .all(|s| s.z.is_finite() && s.c.is_finite())
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput("payload numbers must be finite".into()))
        }
    }
}

/// Laurent coefficients with their starting power.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaurentDoc {
    pub lo: i64,
    pub coeffs: Vec<f64>,
}

impl From<&crate::algebra::LaurentPoly> for LaurentDoc {
    fn from(p: &crate::algebra::LaurentPoly) -> Self {
        LaurentDoc {
            lo: p.lo(),
            coeffs: p.coeffs().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScatteringDoc {
    pub numerator: LaurentDoc,
    pub denominator: LaurentDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundStateReport {
    pub z: f64,
    pub mu: f64,
    pub c: f64,
    #[serde(rename = "C")]
    pub gl: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueDoc {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransmissionReport {
    /// Determinant coefficients, ascending in `λ`.
    pub d: Vec<f64>,
    /// Monic normalisation `E = D/V_b`, ascending in `λ`.
    pub e: Vec<f64>,
    pub eigenvalues: Vec<EigenvalueDoc>,
    pub eigenvalue_sum: f64,
    /// Residual of the trace rule `Σλ - 4(b-1) - Σ_{j<b} V_j`.
    pub sum_rule_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ForwardReport {
    pub kind: String,
    pub b: usize,
    #[serde(rename = "V")]
    pub v: Vec<f64>,
    pub f0: Vec<f64>,
    /// Re-ingestable Jost document for piping into the inverse commands.
    pub jost: ProblemDocument,
    #[serde(rename = "S")]
    pub s: ScatteringDoc,
    pub bound_states: Vec<BoundStateReport>,
    pub endpoints: EndpointReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transmission: Option<TransmissionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transmission_note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EndpointReport {
    pub z_plus_one: String,
    pub z_minus_one: String,
}

fn class_name(c: EndpointClass) -> String {
    match c {
        EndpointClass::Generic => "generic".into(),
        EndpointClass::Exceptional => "exceptional".into(),
    }
}

/// Aggregate the full forward picture of a potential.
pub fn forward_report(v: &Potential) -> Result<ForwardReport> {
    let f0 = jost_function(v);
    let states = bound_states(&f0, v)?;
    let transmission = match transmission_det(v) {
        Ok(det) => {
            let spec = transmission_eigenvalues(v)?;
            let sum = spec.sum();
            let rule = 4.0 * (v.b() as f64 - 1.0) + v.interior_sum();
            Some(TransmissionReport {
                d: det.d.coeffs().to_vec(),
                e: det.e.coeffs().to_vec(),
                eigenvalues: spec
                    .roots()
                    .iter()
                    .map(|r| EigenvalueDoc {
                        re: r.location.re,
                        im: r.location.im,
                        multiplicity: r.multiplicity,
                    })
                    .collect(),
                eigenvalue_sum: sum,
                sum_rule_residual: sum - rule,
            })
        }
        Err(Error::EdgePotentialZero { .. }) => None,
        Err(other) => return Err(other),
    };
    let transmission_note = if transmission.is_none() {
        Some("transmission determinant skipped: last potential value is zero".into())
    } else {
        None
    };
    Ok(ForwardReport {
        kind: "forward_report".into(),
        b: v.b(),
        v: v.values().to_vec(),
        f0: f0.coeffs().to_vec(),
        jost: ProblemDocument::Jost {
            f0: f0.coeffs().to_vec(),
            b: v.b(),
            meta: None,
        },
        s: ScatteringDoc {
            numerator: (&crate::forward::g_from_f(&f0)).into(),
            denominator: (&f0).into(),
        },
        bound_states: states
            .iter()
            .map(|s| BoundStateReport {
                z: s.z,
                mu: s.mu,
                c: s.marchenko_norming,
                gl: s.gl_norming,
            })
            .collect(),
        endpoints: EndpointReport {
            z_plus_one: class_name(classify_endpoint(&f0, Endpoint::PlusOne)),
            z_minus_one: class_name(classify_endpoint(&f0, Endpoint::MinusOne)),
        },
        transmission,
        transmission_note,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticsDoc {
    #[serde(rename = "K01_over_Vb")]
    pub k01_over_vb: f64,
    pub eigenvalue_sum: f64,
    pub usual_sum: f64,
    pub unusual_gap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvertReport {
    pub kind: String,
    pub method: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potential: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f0: Option<Vec<f64>>,
    pub diagnostics: DiagnosticsDoc,
    pub warnings: Vec<String>,
}

/// Run a transmission-eigenvalue inversion and package the report.
pub fn invert_report(eigs: &[[f64; 2]], method: InverseMethod) -> Result<InvertReport> {
    let vals: Vec<Complex64> = eigs.iter().map(|p| Complex64::new(p[0], p[1])).collect();
    let spectrum = TransmissionSpectrum::from_eigenvalues(&vals)?;
    let report = tev_invert(&spectrum, method)?;
    Ok(package_inversion(report, method))
}

pub fn package_inversion(report: InversionReport, method: InverseMethod) -> InvertReport {
    InvertReport {
        kind: "inversion_report".into(),
        method: match method {
            InverseMethod::Marchenko => "marchenko".into(),
            InverseMethod::GelfandLevitan => "gl".into(),
        },
        status: match report.status {
            InversionStatus::Unique => "unique".into(),
            InversionStatus::Unusual => "unusual".into(),
            InversionStatus::Inconsistent => "inconsistent".into(),
        },
        potential: report.potential.as_ref().map(|p| p.values().to_vec()),
        f0: report.f0.as_ref().map(|f| f.coeffs().to_vec()),
        diagnostics: DiagnosticsDoc {
            k01_over_vb: report.diagnostics.k01_over_vb,
            eigenvalue_sum: report.diagnostics.eigenvalue_sum,
            usual_sum: report.diagnostics.usual_sum,
            unusual_gap: report.diagnostics.unusual_gap,
        },
        warnings: report.warnings,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MarchenkoReport {
    pub kind: String,
    pub b: usize,
    pub kernel: Vec<f64>,
    #[serde(rename = "K")]
    pub k_rows: Vec<Vec<f64>>,
    pub potential: Vec<f64>,
}

/// Marchenko inversion of a `jost` document.
pub fn marchenko_report(f0: &[f64], b: usize) -> Result<MarchenkoReport> {
    let f0 = crate::algebra::LaurentPoly::from_poly(f0.to_vec());
    let kernel = marchenko_kernel(&f0, b)?;
    let table = marchenko_solve(&kernel)?;
    let v = marchenko_invert(&f0, b)?;
    Ok(MarchenkoReport {
        kind: "marchenko_report".into(),
        b,
        kernel: kernel.values().to_vec(),
        k_rows: table.rows().to_vec(),
        potential: v.values().to_vec(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GlReport {
    pub kind: String,
    pub b: usize,
    pub route: String,
    #[serde(rename = "G")]
    pub g: Vec<Vec<f64>>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    pub potential: Vec<f64>,
}

/// Gel'fand–Levitan inversion of a `jost` or `gl_data` document.
///
/// With a `jost` document the bound-state data is derived from the Jost
/// function; a `gl_data` document supplies it explicitly and is
/// cross-checked against the derived values.
pub fn gl_report(doc: &ProblemDocument) -> Result<GlReport> {
    let (f0, b, supplied) = match doc {
        ProblemDocument::Jost { f0, b, .. } => (f0.clone(), *b, None),
        ProblemDocument::GlData {
            f0, b, bound_states, ..
        } => (f0.clone(), *b, Some(bound_states.clone())),
        _ => {
            return Err(Error::InvalidInput(
                "gl inversion expects a jost or gl_data document".into(),
            ))
        }
    };
    let f0 = crate::algebra::LaurentPoly::from_poly(f0);
    let data = SpectralData::from_jost(&f0, b)?;
    if let Some(supplied) = supplied {
        if supplied.len() != data.bound_states.len() {
            return Err(Error::InvalidInput(format!(
                "document lists {} bound states but the jost function has {}",
                supplied.len(),
                data.bound_states.len()
            )));
        }
        for doc_state in &supplied {
            let matched = data.bound_states.iter().any(|s| {
                (s.z - doc_state.z).abs() < 1e-6 && (s.gl_norming - doc_state.c).abs() < 1e-6
            });
            if !matched {
                return Err(Error::InvalidInput(format!(
                    "bound state (z = {}, C = {}) does not match the jost function",
                    doc_state.z, doc_state.c
                )));
            }
        }
    }
    let kernel = gl_kernel(&data, b + 1)?;
    let a = gl_solve(&kernel, b)?;
    let v = gl_invert(&data)?;
    let size = kernel.size();
    Ok(GlReport {
        kind: "gl_report".into(),
        b,
        route: match kernel.route() {
            KernelRoute::Residues => "residues".into(),
            KernelRoute::Quadrature { reason } => format!("quadrature ({reason})"),
        },
        g: (1..=size)
            .map(|n| (1..=size).map(|m| kernel.entry(n, m)).collect())
            .collect(),
        a: (1..=a.size())
            .map(|n| (1..=a.size()).map(|j| a.entry(n, j)).collect())
            .collect(),
        potential: v.values().to_vec(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct UnusualFamilyReport {
    pub kind: String,
    pub gamma: f64,
    pub epsilon: f64,
    pub family: String,
    pub potentials: Vec<Vec<f64>>,
}

pub fn unusual_family_report(gamma: f64, epsilon: f64) -> Result<UnusualFamilyReport> {
    let family = crate::tev::unusual_family_b3(gamma, epsilon)?;
    let (label, potentials) = match family {
        UnusualFamilyB3::OneParameter => ("one_parameter".to_string(), Vec::new()),
        UnusualFamilyB3::Finite(members) => (
            "finite".to_string(),
            members.iter().map(|p| p.values().to_vec()).collect(),
        ),
    };
    Ok(UnusualFamilyReport {
        kind: "unusual_b3_report".into(),
        gamma,
        epsilon,
        family: label,
        potentials,
    })
}

/// Serialise with every `f64` printed to 17 significant digits.
pub fn to_json(value: &impl Serialize) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SignificantDigits);
    value
        .serialize(&mut ser)
        .expect("report serialisation cannot fail");
    String::from_utf8(out).expect("json output is utf-8")
}

/// Compact JSON formatter printing floats as 17-significant-digit
/// scientific-notation literals.
struct SignificantDigits;

impl serde_json::ser::Formatter for SignificantDigits {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}
