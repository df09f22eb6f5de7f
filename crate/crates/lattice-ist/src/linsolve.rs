//! Dense linear solve by Gaussian elimination with partial pivoting.
//!
//! The systems in this crate never exceed a few dozen unknowns, so a plain
//! row-major elimination is adequate.

use crate::error::{Error, Result};

/// Singularity threshold on pivots, relative to the largest matrix entry.
const PIVOT_TOL: f64 = 1e-12;

/// Solve `A x = b` in place of copies; `a` is row-major `n x n`.
///
/// Fails with the zero-based row index at which elimination found no usable
/// pivot.
pub fn solve(a: &[Vec<f64>], b: &[f64]) -> Result<Vec<f64>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    let scale = a
        .iter()
        .flat_map(|row| row.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1e-300);

    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut rhs = b.to_vec();

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        let pivot = m[pivot_row][col];
        if pivot.abs() <= PIVOT_TOL * scale {
            return Err(Error::SingularSystem {
                row: col,
                pivot,
            });
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let (pivot_rows, rest) = m.split_at_mut(col + 1);
        let pivot_vals = &pivot_rows[col];
        for (offset, row_vals) in rest.iter_mut().enumerate() {
            let factor = row_vals[col] / pivot_vals[col];
            if factor == 0.0 {
                continue;
            }
            for (rk, pk) in row_vals[col..].iter_mut().zip(&pivot_vals[col..]) {
                *rk -= factor * pk;
            }
            rhs[col + 1 + offset] -= factor * rhs[col];
        }
    }

    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in (row + 1)..n {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}
