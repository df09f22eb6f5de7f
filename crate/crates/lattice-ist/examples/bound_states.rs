//! Bound states of single- and two-site potentials: locations in both
//! spectral parameters and the two norming constants, including the bridge
//! `c = |g0(z)/(z - 1/z)| C` between them.
//!
//! Run with `cargo run --example bound_states`.

use lattice_ist::forward::{bound_states, g_from_f, jost_function, Potential};

fn main() -> lattice_ist::Result<()> {
    println!("single-site potentials: a bound state appears once |V1| > 1");
    for v1 in [0.5, 0.9, 1.1, 2.0, -3.0] {
        let v = Potential::new(vec![v1])?;
        let f0 = jost_function(&v);
        let states = bound_states(&f0, &v)?;
        match states.first() {
            Some(s) => println!(
                "  V1 = {v1:+.1}: bound state at z = {:+.6}, energy {:+.6}, c = {:.6}",
                s.z, s.mu, s.marchenko_norming
            ),
            None => println!("  V1 = {v1:+.1}: no bound state"),
        }
    }

    println!("\ntwo-site potential (1.5, -0.5):");
    let v = Potential::new(vec![1.5, -0.5])?;
    let f0 = jost_function(&v);
    let g0 = g_from_f(&f0);
    for s in bound_states(&f0, &v)? {
        let kappa = (g0.eval_real(s.z) / (s.z - 1.0 / s.z)).abs();
        println!("  z = {:+.12}  energy = {:+.12}", s.z, s.mu);
        println!("  jost-normalised constant     c = {:.12}", s.marchenko_norming);
        println!("  regular-normalised constant  C = {:.12}", s.gl_norming);
        println!(
            "  bridge |g0(z)/(z - 1/z)| = {kappa:.12}, c/C = {:.12}",
            s.marchenko_norming / s.gl_norming
        );
    }
    Ok(())
}
