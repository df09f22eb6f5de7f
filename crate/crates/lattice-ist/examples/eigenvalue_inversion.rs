//! Recover potentials from transmission eigenvalues: the unique case via
//! both linear methods, and detection of the unusual case in which the
//! eigenvalue sum equals 4(b-1) and the reconstruction is refused.
//!
//! Run with `cargo run --example eigenvalue_inversion`.

use lattice_ist::forward::TransmissionSpectrum;
use lattice_ist::tev::{tev_invert, InverseMethod};
use num_complex::Complex64;

fn invert_and_print(eigs: &[Complex64], method: InverseMethod) -> lattice_ist::Result<()> {
    let spectrum = TransmissionSpectrum::from_eigenvalues(eigs)?;
    let report = tev_invert(&spectrum, method)?;
    println!("  method {method:?}: status {:?}", report.status);
    println!(
        "    Σλ = {:.12}, 4(b-1) = {}, K01/Vb = {:.12}",
        report.diagnostics.eigenvalue_sum,
        report.diagnostics.usual_sum,
        report.diagnostics.k01_over_vb
    );
    if let Some(v) = &report.potential {
        println!("    potential: {:?}", v.values());
    }
    for w in &report.warnings {
        println!("    warning: {w}");
    }
    Ok(())
}

fn main() -> lattice_ist::Result<()> {
    let r = 57f64.sqrt();
    println!("eigenvalues (11±√57)/4 — unique two-site potential:");
    let pair = [
        Complex64::new((11.0 + r) / 4.0, 0.0),
        Complex64::new((11.0 - r) / 4.0, 0.0),
    ];
    invert_and_print(&pair, InverseMethod::Marchenko)?;
    invert_and_print(&pair, InverseMethod::GelfandLevitan)?;

    println!("\neigenvalues (-1, 4) — unique two-site potential:");
    let pair = [Complex64::new(-1.0, 0.0), Complex64::new(4.0, 0.0)];
    invert_and_print(&pair, InverseMethod::GelfandLevitan)?;

    println!("\ncomplex pair (1±i) — valid conjugate-closed input:");
    let pair = [Complex64::new(1.0, 1.0), Complex64::new(1.0, -1.0)];
    invert_and_print(&pair, InverseMethod::Marchenko)?;

    println!("\ndouble eigenvalue (2, 2) — the unusual case, Σλ = 4(b-1):");
    let pair = [Complex64::new(2.0, 0.0), Complex64::new(2.0, 0.0)];
    invert_and_print(&pair, InverseMethod::Marchenko)?;

    Ok(())
}
