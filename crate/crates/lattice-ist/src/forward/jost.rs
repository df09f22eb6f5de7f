//! The Jost coefficient table, Jost function, and scattering matrix.
//!
//! The Jost solution behaves like `z^n` beyond the support, so for each row
//! `n < b` it reduces to a polynomial `m_n = z^{-n} f_n` in `z`. Rows follow
//! from the downward three-term recursion
//! `m_{n-1} = -z² m_{n+1} + (z² + V_n z + 1) m_n` seeded with `m_n = 1` for
//! `n >= b`.

use num_complex::Complex64;

use super::Potential;
use crate::algebra::LaurentPoly;

/// Triangular table of Jost coefficients.
///
/// `entry(n, m)` is the coefficient of `z^{m-n}` in `m_n`, nonzero only for
/// `n <= m <= 2b - n - 1`. Row `n` therefore carries `2(b - n)` numbers:
/// `entry(n, n) = 1` always, and `entry(n, 2b-n-1) = V_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct KTable {
    b: usize,
    rows: Vec<Vec<f64>>,
}

impl KTable {
    pub fn b(&self) -> usize {
        self.b
    }

    /// The coefficient `K_{nm}`; zero outside the triangular index range.
    pub fn entry(&self, n: usize, m: usize) -> f64 {
        if n >= self.b || m < n || m > 2 * self.b - n - 1 {
            return 0.0;
        }
        self.rows[n][m - n]
    }

    /// Row `n` as the polynomial `m_n` in `z`.
    pub fn row_poly(&self, n: usize) -> LaurentPoly {
        if n >= self.b {
            return LaurentPoly::one();
        }
        LaurentPoly::from_poly(self.rows[n].clone())
    }

    /// The Jost solution `f_n` as a polynomial in `z` (equals `z^n` once `n`
    /// passes the support).
    pub fn jost_poly(&self, n: usize) -> LaurentPoly {
        if n >= self.b {
            return LaurentPoly::monomial(n as i64, 1.0);
        }
        self.row_poly(n).shifted(n as i64)
    }

    /// The reflected solution `g_n` obtained from `f_n` by `z -> 1/z`.
    pub fn reflected_poly(&self, n: usize) -> LaurentPoly {
        self.jost_poly(n).reversed()
    }

    /// Evaluate `f_n(z)`; valid for all `n >= 0`.
    pub fn jost_eval(&self, n: usize, z: Complex64) -> Complex64 {
        if n >= self.b {
            return z.powi(n as i32);
        }
        self.jost_poly(n).eval(z)
    }

    /// Evaluate `g_n(z) = f_n(1/z)`.
    pub fn reflected_eval(&self, n: usize, z: Complex64) -> Complex64 {
        self.jost_eval(n, z.inv())
    }

    /// Number of rows (`b`); rows `n >= b` are implicit.
    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub(crate) fn from_rows(b: usize, rows: Vec<Vec<f64>>) -> Self {
        debug_assert_eq!(rows.len(), b);
        KTable { b, rows }
    }
}

/// Compute the full Jost coefficient table of a potential.
pub fn jost_table(v: &Potential) -> KTable {
    let b = v.b();
    let mut rows: Vec<Vec<f64>> = vec![Vec::new(); b];

    // Seed: m_b and m_{b+1} are both 1. The first step formally produces a
    // cancelled leading term, dropped by truncating to the nominal length.
    let step = |m_next: &[f64], m_cur: &[f64], site: f64| -> Vec<f64> {
        let mut out = vec![0.0; m_cur.len() + 2];
        for (j, &c) in m_cur.iter().enumerate() {
            out[j] += c;
            out[j + 1] += site * c;
            out[j + 2] += c;
        }
        for (j, &c) in m_next.iter().enumerate() {
            out[j + 2] -= c;
        }
        out
    };

    let one = vec![1.0];
    let mut first = step(&one, &one, v.value(b));
    first.truncate(2);
    rows[b - 1] = first;

    for n in (1..b).rev() {
        let m_next = if n + 1 < b {
            rows[n + 1].clone()
        } else {
            one.clone()
        };
        rows[n - 1] = step(&m_next, &rows[n], v.value(n));
    }
    KTable::from_rows(b, rows)
}

/// The Jost function `f_0` as a polynomial in `z` with constant term 1.
pub fn jost_function(v: &Potential) -> LaurentPoly {
    jost_table(v).row_poly(0)
}

/// Mirror a Jost function into its reflected partner `g_0` by `z -> 1/z`.
pub fn g_from_f(f0: &LaurentPoly) -> LaurentPoly {
    debug_assert!(f0.lo() == 0, "jost function must start at z^0");
    f0.reversed()
}

/// Scattering matrix `S = g_0 / f_0` kept as a rational pair.
#[derive(Debug, Clone)]
pub struct ScatteringMatrix {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
}

impl ScatteringMatrix {
    /// Build from a Jost function with constant term 1.
    pub fn from_jost(f0: &LaurentPoly) -> Self {
        ScatteringMatrix {
            numerator: g_from_f(f0),
            denominator: f0.clone(),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.numerator.eval(z) / self.denominator.eval(z)
    }
}
