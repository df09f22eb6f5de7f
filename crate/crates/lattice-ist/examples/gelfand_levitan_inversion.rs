//! Recover a potential from spectral data through the Gel'fand-Levitan
//! system, comparing the residue-calculus kernel against the band
//! quadrature on a case with a bound state.
//!
//! Run with `cargo run --example gelfand_levitan_inversion`.

use lattice_ist::forward::{Potential, SpectralData};
use lattice_ist::gelfand_levitan::{gl_invert, gl_kernel, gl_kernel_quadrature, gl_solve};

fn main() -> lattice_ist::Result<()> {
    let v = Potential::new(vec![1.5, -0.5])?;
    let data = SpectralData::from_potential(&v)?;
    println!("potential {:?}, {} bound state(s)", v.values(), data.bound_states.len());

    let size = v.b() + 1;
    let residues = gl_kernel(&data, size)?;
    let quadrature = gl_kernel_quadrature(&data, size, 2000);
    println!("\nkernel matrix (residue route, {:?}):", residues.route());
    for n in 1..=size {
        let row: Vec<String> = (1..=size)
            .map(|m| format!("{:+.12}", residues.entry(n, m)))
            .collect();
        println!("  [{}]", row.join(", "));
    }
    let mut gap = 0.0f64;
    for n in 1..=size {
        for m in 1..=size {
            gap = gap.max((residues.entry(n, m) - quadrature.entry(n, m)).abs());
        }
    }
    println!("largest residue-vs-quadrature gap: {gap:.3e}");

    let a = gl_solve(&residues, v.b())?;
    println!("\nexpansion coefficients of the regular solutions:");
    for n in 2..=(v.b() + 1) {
        let row: Vec<String> = (1..n)
            .map(|j| format!("A[{n}][{j}] = {:+.12}", a.entry(n, j)))
            .collect();
        println!("  {}", row.join("   "));
    }

    let recovered = gl_invert(&data)?;
    println!("\nrecovered potential: {:?}", recovered.values());
    println!("max deviation from the input: {:.3e}", recovered.max_gap(&v));
    Ok(())
}
