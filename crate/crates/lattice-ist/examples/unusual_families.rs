//! The three-site families of the unusual case: distinct potentials of the
//! form (V1, -V1, V3) sharing one transmission spectrum. Depending on the
//! shape parameters there may be one, two, or three members, or a free
//! parameter.
//!
//! Run with `cargo run --example unusual_families`.

use lattice_ist::forward::transmission_eigenvalues;
use lattice_ist::tev::{unusual_family_b3, UnusualFamilyB3};

fn main() -> lattice_ist::Result<()> {
    for (gamma, epsilon) in [(7.0, 6.0), (3.0, 2.0), (0.0, 1.0), (0.0, 0.0)] {
        println!("shape parameters (γ, ε) = ({gamma}, {epsilon}):");
        match unusual_family_b3(gamma, epsilon)? {
            UnusualFamilyB3::OneParameter => {
                println!("  one-parameter family: V1 = V2 = 0, V3 any nonzero value\n");
            }
            UnusualFamilyB3::Finite(members) => {
                for v in &members {
                    println!("  member {:?}", v.values());
                }
                // all members share one spectrum
                let spectra: Vec<_> = members
                    .iter()
                    .map(transmission_eigenvalues)
                    .collect::<lattice_ist::Result<_>>()?;
                if let Some(first) = spectra.first() {
                    print!("  shared eigenvalues:");
                    for root in first.roots() {
                        print!(" {:.5}", root.location);
                    }
                    println!();
                    for (v, s) in members.iter().zip(&spectra).skip(1) {
                        println!(
                            "  spectrum of {:?} matches to {:.2e}",
                            v.values(),
                            first.multiset_distance(s)
                        );
                    }
                }
                println!();
            }
        }
    }
    Ok(())
}
