//! Regular solutions as polynomials in `λ`, the free (zero-potential)
//! family, and the triangular basis change between the two.

use super::Potential;
use crate::algebra::LambdaPoly;

/// Regular solutions `φ_0, φ_1, ..., φ_{n_max}` of the lattice equation with
/// Dirichlet data `φ_0 = 0`, `φ_1 = 1`, indexed naturally.
///
/// `φ_n` is a polynomial in `λ` of degree `n - 1` with leading coefficient
/// `(-1)^{n-1}`.
pub fn regular_solutions(v: &Potential, n_max: usize) -> Vec<LambdaPoly> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(LambdaPoly::zero());
    if n_max == 0 {
        return out;
    }
    out.push(LambdaPoly::one());
    for n in 1..n_max {
        // φ_{n+1} = (2 - λ + V_n) φ_n - φ_{n-1}
        let factor = LambdaPoly::new(vec![2.0 + v.value(n), -1.0]);
        let next = factor.mul(&out[n]).sub(&out[n - 1]);
        out.push(next);
    }
    out
}

/// Free regular solutions `φ̊_0, ..., φ̊_{n_max}` (zero potential), the
/// Chebyshev-like family generated by `φ̊_{n+1} = (2 - λ) φ̊_n - φ̊_{n-1}`.
pub fn free_regulars(n_max: usize) -> Vec<LambdaPoly> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(LambdaPoly::zero());
    if n_max == 0 {
        return out;
    }
    out.push(LambdaPoly::one());
    let factor = LambdaPoly::new(vec![2.0, -1.0]);
    for n in 1..n_max {
        let next = factor.mul(&out[n]).sub(&out[n - 1]);
        out.push(next);
    }
    out
}

/// The single free regular solution `φ̊_n`.
pub fn free_regular(n: usize) -> LambdaPoly {
    free_regulars(n).pop().unwrap()
}

/// Lower-triangular expansion coefficients of the regular solutions over the
/// free family: `φ_n = φ̊_n + Σ_{j<n} A_{nj} φ̊_j`.
///
/// The diagonal is implicitly 1 and `entry(n, 0) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ATable {
    size: usize,
    // strictly lower-triangular entries: strict[n-2][j-1] = A_{nj}, j < n
    strict: Vec<Vec<f64>>,
}

impl ATable {
    /// Largest row index `n` carried by the table.
    pub fn size(&self) -> usize {
        self.size
    }

    /// The coefficient `A_{nj}`; 1 on the diagonal, 0 outside the triangle.
    pub fn entry(&self, n: usize, j: usize) -> f64 {
        if n == j && n >= 1 {
            return 1.0;
        }
        if j == 0 || j > n || n < 2 || n > self.size {
            return 0.0;
        }
        self.strict[n - 2][j - 1]
    }

    pub(crate) fn from_strict(size: usize, strict: Vec<Vec<f64>>) -> Self {
        ATable { size, strict }
    }

    /// Potential read off the first subdiagonal: `V_n = A_{(n+1)n} - A_{n(n-1)}`.
    pub fn potential(&self, b: usize) -> Potential {
        let values = (1..=b)
            .map(|n| self.entry(n + 1, n) - self.entry(n, n - 1))
            .collect();
        Potential::new(values).expect("b >= 1 by construction")
    }
}

/// Expansion coefficients of `φ_1..φ_{n_max}` over the free family, computed
/// by triangular elimination. The free leading coefficients are `±1`, so the
/// elimination divides only by exact units.
pub fn a_coefficients(v: &Potential, n_max: usize) -> ATable {
    let phi = regular_solutions(v, n_max);
    let free = free_regulars(n_max);
    let mut strict = Vec::with_capacity(n_max.saturating_sub(1));
    for n in 2..=n_max {
        let mut residue = phi[n].clone();
        let mut row = vec![0.0; n - 1];
        for j in (1..=n).rev() {
            let lead = residue.coeff(j - 1) / free[j].coeff(j - 1);
            if j < n {
                row[j - 1] = lead;
            }
            residue = residue.sub(&free[j].scale(lead));
        }
        strict.push(row);
    }
    ATable::from_strict(n_max, strict)
}
