//! Helpers shared by the integration suites: seeded random potentials and
//! the contour-quadrature oracle for the Marchenko kernel.

use num_complex::Complex64;
use rand::Rng;

use lattice_ist::forward::{bound_states_from_jost, jost_function, Potential, ScatteringMatrix};
use lattice_ist::LaurentPoly;

/// Random potential with entries uniform in `[-2, 2]` and `|V_b| >= 0.1`.
pub fn random_potential(rng: &mut impl Rng, b: usize) -> Potential {
    let mut values: Vec<f64> = (0..b).map(|_| rng.gen_range(-2.0..2.0)).collect();
    while values[b - 1].abs() < 0.1 {
        values[b - 1] = rng.gen_range(-2.0..2.0);
    }
    Potential::new(values).unwrap()
}

/// Random potential whose interior sum stays away from the unusual case.
pub fn random_usual_potential(rng: &mut impl Rng, b: usize) -> Potential {
    loop {
        let v = random_potential(rng, b);
        if v.interior_sum().abs() >= 0.1 {
            return v;
        }
    }
}

/// True when every Jost zero keeps a safe distance from the unit circle, so
/// that circle quadratures of the scattering data converge fast.
pub fn roots_clear_of_circle(f0: &LaurentPoly, margin: f64) -> bool {
    if f0.hi() == 0 {
        return true;
    }
    f0.roots()
        .map(|set| {
            set.roots
                .iter()
                .all(|r| (r.location.norm() - 1.0).abs() > margin)
        })
        .unwrap_or(false)
}

/// Keep drawing until the Jost zeros stay `margin` away from the circle.
pub fn random_potential_clear_of_circle(
    rng: &mut impl Rng,
    b: usize,
    margin: f64,
) -> Potential {
    loop {
        let v = random_potential(rng, b);
        if roots_clear_of_circle(&jost_function(&v), margin) {
            return v;
        }
    }
}

/// Marchenko kernel by its defining contour integral: a uniform trapezoid
/// over the unit circle of `(1 - S) z^n` plus the discrete bound-state sum
/// `Σ c_s² z_s^n`. Spectrally accurate once the Jost zeros keep away from
/// the circle.
pub fn marchenko_kernel_oracle(f0: &LaurentPoly, b: usize, points: usize) -> Vec<f64> {
    let s = ScatteringMatrix::from_jost(f0);
    let states = bound_states_from_jost(f0).expect("oracle inputs have clean root sets");
    let mut out = Vec::with_capacity(2 * b - 1);
    for n in 1..=(2 * b - 1) {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..points {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / points as f64;
            let z = Complex64::new(theta.cos(), theta.sin());
            acc += (Complex64::new(1.0, 0.0) - s.eval(z)) * z.powi(n as i32);
        }
        let mut value = acc.re / points as f64;
        for st in &states {
            value += st.marchenko_norming.powi(2) * st.z.powi(n as i32);
        }
        out.push(value);
    }
    out
}
