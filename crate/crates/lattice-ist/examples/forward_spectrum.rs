//! Compute the full forward spectral picture of a finitely supported
//! potential: Jost function, scattering matrix, bound states, endpoint
//! classes, transmission determinant, and transmission eigenvalues.
//!
//! Run with `cargo run --example forward_spectrum`.

use lattice_ist::forward::{
    bound_states, classify_endpoint, jost_function, transmission_det,
    transmission_eigenvalues, Endpoint, Potential, ScatteringMatrix,
};
use num_complex::Complex64;

fn main() -> lattice_ist::Result<()> {
    let v = Potential::new(vec![1.5, -0.5])?;
    println!("potential V = {:?} (support b = {})", v.values(), v.b());

    let f0 = jost_function(&v);
    println!("\njost function      f0(z) = {f0}");

    let s = ScatteringMatrix::from_jost(&f0);
    let z = Complex64::new(0.6f64.cos(), 0.6f64.sin());
    println!("scattering matrix  S = g0/f0, e.g. |S(e^0.6i)| = {:.15}", s.eval(z).norm());

    println!("\nbound states:");
    for state in bound_states(&f0, &v)? {
        println!(
            "  z = {:+.12}   energy = {:+.12}   c = {:.12}   C = {:.12}",
            state.z, state.mu, state.marchenko_norming, state.gl_norming
        );
    }

    println!("\nendpoint classes:");
    println!("  z = +1 (band bottom): {:?}", classify_endpoint(&f0, Endpoint::PlusOne));
    println!("  z = -1 (band top):    {:?}", classify_endpoint(&f0, Endpoint::MinusOne));

    let det = transmission_det(&v)?;
    println!("\ntransmission determinant  D(λ) = {}", det.d);
    println!("monic normalisation       E(λ) = {}", det.e);

    let spec = transmission_eigenvalues(&v)?;
    println!("\ntransmission eigenvalues ({} of them):", spec.count());
    for root in spec.roots() {
        println!("  λ = {}  (multiplicity {})", root.location, root.multiplicity);
    }
    let rule = 4.0 * (v.b() as f64 - 1.0) + v.interior_sum();
    println!(
        "eigenvalue sum {:.12} vs 4(b-1) + ΣV_interior = {:.12}",
        spec.sum(),
        rule
    );
    Ok(())
}
