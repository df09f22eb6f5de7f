//! Recover a potential from its Jost function through the Marchenko linear
//! system, printing every intermediate: the kernel, the solved coefficient
//! table, and the recovered values.
//!
//! Run with `cargo run --example marchenko_inversion`.

use lattice_ist::forward::jost_function;
use lattice_ist::marchenko::{marchenko_kernel, marchenko_solve, potential_from_k};
use lattice_ist::LaurentPoly;

fn main() -> lattice_ist::Result<()> {
    // Jost function of the two-site potential (3/2, -1/2)
    let f0 = LaurentPoly::from_poly(vec![1.0, 1.0, -0.75, -0.5]);
    let b = 2;
    println!("input jost function: f0(z) = {f0}");

    let kernel = marchenko_kernel(&f0, b)?;
    println!("\nkernel values M_1..M_{}:", 2 * b - 1);
    for (i, m) in kernel.values().iter().enumerate() {
        println!("  M_{} = {m:+.12}", i + 1);
    }
    println!("  (M_n = 0 from n = {} on)", 2 * b);

    let table = marchenko_solve(&kernel)?;
    println!("\nsolved coefficient table:");
    for n in 0..b {
        let row: Vec<String> = (n..=(2 * b - n - 1))
            .map(|m| format!("K[{n}][{m}] = {:+.12}", table.entry(n, m)))
            .collect();
        println!("  {}", row.join("   "));
    }

    let v = potential_from_k(&table);
    println!("\nrecovered potential: {:?}", v.values());

    let back = jost_function(&v);
    println!(
        "round-trip check: max jost coefficient gap = {:.3e}",
        back.max_coeff_gap(&f0)
    );
    Ok(())
}
