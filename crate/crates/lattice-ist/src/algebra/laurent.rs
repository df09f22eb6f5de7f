//! Real Laurent polynomials in the spectral parameter `z`, plus the change
//! of variable `λ = 2 - z - 1/z` in both directions.

use num_complex::Complex64;

use super::lambda::LambdaPoly;
use super::{PALINDROME_TOL, TRIM_REL};
use crate::error::{Error, Result};

/// Real Laurent polynomial `Σ c_k z^k` for `k = lo..=hi`.
///
/// Coefficients are stored ascending from `lo`. Both ends stay significant:
/// constructors trim boundary coefficients below `1e-12` of the largest
/// magnitude. The zero element has an empty coefficient vector and `lo = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<f64>,
}

impl LaurentPoly {
    /// Build from the coefficient of `z^lo` upward.
    pub fn new(lo: i64, coeffs: Vec<f64>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.normalize();
        p
    }

    /// Ordinary polynomial in `z` (lowest power `z^0`).
    pub fn from_poly(coeffs: Vec<f64>) -> Self {
        Self::new(0, coeffs)
    }

    pub fn zero() -> Self {
        LaurentPoly {
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            lo: 0,
            coeffs: vec![1.0],
        }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(0, vec![c])
    }

    /// The monomial `c z^k`.
    pub fn monomial(k: i64, c: f64) -> Self {
        Self::new(k, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored power (0 for the zero element).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest stored power (0 for the zero element).
    pub fn hi(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.lo + self.coeffs.len() as i64 - 1
        }
    }

    /// Coefficient of `z^k` (zero outside the stored range).
    pub fn coeff(&self, k: i64) -> f64 {
        if k < self.lo {
            return 0.0;
        }
        self.coeffs.get((k - self.lo) as usize).copied().unwrap_or(0.0)
    }

    /// Coefficients ascending from `lo`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Iterate `(power, coefficient)` pairs over the stored range.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, &c)| (self.lo + i as i64, c))
    }

    /// Largest coefficient magnitude; zero for the zero element.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        // Horner on the polynomial part, then the z^lo shift.
        let p = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
        p * z.powi(self.lo as i32)
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        let p = self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
        p * x.powi(self.lo as i32)
    }

    /// Derivative with respect to `z`.
    pub fn derivative(&self) -> LaurentPoly {
        let coeffs = self
            .iter()
            .map(|(k, c)| k as f64 * c)
            .collect::<Vec<_>>();
        LaurentPoly::new(self.lo - 1, coeffs)
    }

    pub fn scale(&self, s: f64) -> LaurentPoly {
        LaurentPoly::new(self.lo, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by `z^delta`.
    pub fn shifted(&self, delta: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            lo: self.lo + delta,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitute `z -> 1/z` (reverse the coefficient sequence).
    pub fn reversed(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            lo: -self.hi(),
            coeffs,
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.combine(other, -1.0)
    }

    fn combine(&self, other: &LaurentPoly, sign: f64) -> LaurentPoly {
        if self.is_zero() {
            return other.scale(sign);
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let coeffs = (lo..=hi)
            .map(|k| self.coeff(k) + sign * other.coeff(k))
            .collect();
        LaurentPoly::new(lo, coeffs)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.lo + other.lo, coeffs)
    }

    /// Restriction to strictly positive powers of `z`.
    pub fn plus_part(&self) -> LaurentPoly {
        let lo = self.lo.max(1);
        if self.is_zero() || self.hi() < 1 {
            return LaurentPoly::zero();
        }
        let coeffs = (lo..=self.hi()).map(|k| self.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }

    /// Restriction to strictly negative powers of `z`.
    pub fn minus_part(&self) -> LaurentPoly {
        if self.is_zero() || self.lo > -1 {
            return LaurentPoly::zero();
        }
        let hi = self.hi().min(-1);
        let coeffs = (self.lo..=hi).map(|k| self.coeff(k)).collect();
        LaurentPoly::new(self.lo, coeffs)
    }

    /// Coefficient of `z^0`.
    pub fn zero_coeff(&self) -> f64 {
        self.coeff(0)
    }

    /// Worst asymmetry `|c_k - c_{-k}|` over the stored range.
    pub fn palindrome_gap(&self) -> f64 {
        let span = self.lo.abs().max(self.hi().abs());
        (1..=span)
            .map(|k| (self.coeff(k) - self.coeff(-k)).abs())
            .fold(0.0, f64::max)
    }

    /// Maximum absolute coefficient difference against `other`.
    pub fn max_coeff_gap(&self, other: &LaurentPoly) -> f64 {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        (lo..=hi)
            .map(|k| (self.coeff(k) - other.coeff(k)).abs())
            .fold(0.0, f64::max)
    }

    fn normalize(&mut self) {
        let scale = self.coeff_scale();
        if !scale.is_finite() {
            return;
        }
        if scale == 0.0 {
            self.coeffs.clear();
            self.lo = 0;
            return;
        }
        let threshold = TRIM_REL * scale;
        while let Some(&c) = self.coeffs.last() {
            if c.abs() <= threshold {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        let skip = self
            .coeffs
            .iter()
            .take_while(|c| c.abs() <= threshold)
            .count();
        if skip > 0 {
            self.coeffs.drain(..skip);
            self.lo += skip as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter().collect::<Vec<_>>().into_iter().rev() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { "-" } else { "+" })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a == 1.0 => write!(f, "z")?,
                1 => write!(f, "{a} z")?,
                _ if a == 1.0 => write!(f, "z^{k}")?,
                _ => write!(f, "{a} z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Substitute `λ = 2 - z - 1/z` into a `λ`-polynomial.
///
/// The image is palindromic (`c_k = c_{-k}`) with span `-d..=d` for input
/// degree `d`.
pub fn lambda_to_laurent(p: &LambdaPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let w = LaurentPoly::new(-1, vec![-1.0, 2.0, -1.0]); // 2 - z - 1/z
    let mut acc = LaurentPoly::zero();
    for &c in p.coeffs().iter().rev() {
        acc = acc.mul(&w).add(&LaurentPoly::constant(c));
    }
    acc
}

/// Invert the substitution `λ = 2 - z - 1/z` on a palindromic Laurent
/// polynomial.
///
/// Uses `s_k = z^k + z^{-k}` with `s_0 = 2`, `s_1 = 2 - λ` and the recurrence
/// `s_{k+1} = (2 - λ) s_k - s_{k-1}`; the input decomposes as
/// `c_0 + Σ_{k≥1} c_k s_k` after symmetrising the coefficients.
pub fn laurent_to_lambda(l: &LaurentPoly) -> Result<LambdaPoly> {
    if l.is_zero() {
        return Ok(LambdaPoly::zero());
    }
    let scale = l.coeff_scale();
    let gap = l.palindrome_gap();
    if gap > PALINDROME_TOL * scale {
        return Err(Error::NotPalindromic {
            asymmetry: gap,
            scale,
        });
    }
    let span = l.lo().abs().max(l.hi().abs());
    let mut result = LambdaPoly::constant(l.zero_coeff());
    let mut s_prev = LambdaPoly::constant(2.0); // z^0 + z^0
    let mut s_cur = LambdaPoly::new(vec![2.0, -1.0]); // z + 1/z
    for k in 1..=span {
        let c = 0.5 * (l.coeff(k) + l.coeff(-k));
        if c != 0.0 {
            result = result.add(&s_cur.scale(c));
        }
        if k < span {
            let s_next = LambdaPoly::new(vec![2.0, -1.0]).mul(&s_cur).sub(&s_prev);
            s_prev = s_cur;
            s_cur = s_next;
        }
    }
    Ok(result)
}

/// Taylor coefficients of `1/p` at `z = 0` through the requested order.
///
/// `p` must not involve negative powers and must not vanish at the origin.
pub fn reciprocal_series(p: &LaurentPoly, order: usize) -> Result<Vec<f64>> {
    if p.lo() < 0 {
        return Err(Error::InvalidInput(
            "reciprocal series requires a polynomial with no negative powers".into(),
        ));
    }
    let c0 = p.coeff(0);
    if c0.abs() < 1e-14 {
        return Err(Error::SingularAtOrigin { value: c0 });
    }
    let mut out = vec![0.0; order + 1];
    out[0] = 1.0 / c0;
    for k in 1..=order {
        let mut acc = 0.0;
        let jmax = (k as i64).min(p.hi());
        for j in 1..=jmax {
            acc += p.coeff(j) * out[k - j as usize];
        }
        out[k] = -acc / c0;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_image_of_the_identity_map() {
        let img = lambda_to_laurent(&LambdaPoly::new(vec![0.0, 1.0]));
        assert_eq!(img.coeff(-1), -1.0);
        assert_eq!(img.coeff(0), 2.0);
        assert_eq!(img.coeff(1), -1.0);
        assert_eq!(img.lo(), -1);
        assert_eq!(img.hi(), 1);
    }

    #[test]
    fn lambda_image_of_constants_is_fixed() {
        let img = lambda_to_laurent(&LambdaPoly::one());
        assert_eq!(img, LaurentPoly::one());
    }

    #[test]
    fn quadratic_image_times_z_minus_inv() {
        // λ² - 3λ - 4, then multiply by (z - 1/z)
        let e = LambdaPoly::new(vec![-4.0, -3.0, 1.0]);
        let img = lambda_to_laurent(&e);
        let prod = img.mul(&LaurentPoly::new(-1, vec![-1.0, 0.0, 1.0]));
        let want = LaurentPoly::new(-3, vec![-1.0, 1.0, 5.0, 0.0, -5.0, -1.0, 1.0]);
        assert!(prod.max_coeff_gap(&want) < 1e-12);
    }

    #[test]
    fn inverse_substitution_linear() {
        let l = LaurentPoly::new(-1, vec![1.0, 0.0, 1.0]); // z + 1/z
        let p = laurent_to_lambda(&l).unwrap();
        assert_eq!(p.coeffs(), &[2.0, -1.0]);
        let c = laurent_to_lambda(&LaurentPoly::constant(5.0)).unwrap();
        assert_eq!(c.coeffs(), &[5.0]);
    }

    #[test]
    fn inverse_substitution_two_site_determinant() {
        // Laurent form of the transmission determinant for V = (-4, -1):
        // D = V2(z² + 1 + z⁻²) + V1 V2 (z + 1/z) + (V1 + V2)
        let (v1, v2) = (-4.0, -1.0);
        let d = LaurentPoly::new(
            -2,
            vec![v2, v1 * v2, v2 + v1 + v2, v1 * v2, v2],
        );
        let p = laurent_to_lambda(&d).unwrap();
        // V2 λ² - V2(4+V1) λ + (V1 + 2 V1 V2 + 4 V2) = -λ²
        assert!(p.max_coeff_gap(&LambdaPoly::new(vec![0.0, 0.0, -1.0])) < 1e-12);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let l = LaurentPoly::new(-1, vec![1.0, 0.0, 2.0]);
        assert!(matches!(
            laurent_to_lambda(&l),
            Err(Error::NotPalindromic { .. })
        ));
    }

    #[test]
    fn part_extraction() {
        let l = LaurentPoly::new(-3, vec![-1.0, 1.0, 5.0, 0.0, -5.0, -1.0, 1.0]);
        let plus = l.plus_part();
        assert_eq!(plus, LaurentPoly::new(1, vec![-5.0, -1.0, 1.0]));
        let minus = l.minus_part();
        assert_eq!(minus, LaurentPoly::new(-3, vec![-1.0, 1.0, 5.0]));
        assert_eq!(l.zero_coeff(), 0.0);
        assert!(LaurentPoly::constant(7.0).plus_part().is_zero());
        // plus + minus + z⁰ reconstructs the original
        let rebuilt = plus
            .add(&minus)
            .add(&LaurentPoly::constant(l.zero_coeff()));
        assert_eq!(rebuilt, l);
    }

    #[test]
    fn reciprocal_series_examples() {
        let one = LaurentPoly::one();
        assert_eq!(reciprocal_series(&one, 3).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);

        let geo = LaurentPoly::from_poly(vec![1.0, 0.5]);
        let a = reciprocal_series(&geo, 4).unwrap();
        for (k, &ak) in a.iter().enumerate() {
            assert!((ak - (-0.5f64).powi(k as i32)).abs() < 1e-15);
        }

        // 1 + z - (3/4)z² - (1/2)z³
        let f0 = LaurentPoly::from_poly(vec![1.0, 1.0, -0.75, -0.5]);
        let a = reciprocal_series(&f0, 3).unwrap();
        let want = [1.0, -1.0, 1.75, -2.0];
        for (ak, wk) in a.iter().zip(want.iter()) {
            assert!((ak - wk).abs() < 1e-14);
        }

        let singular = LaurentPoly::new(1, vec![1.0]);
        assert!(reciprocal_series(&singular, 2).is_err());
    }

    #[test]
    fn reversal_and_derivative() {
        let f = LaurentPoly::from_poly(vec![1.0, 2.0, 3.0]);
        let g = f.reversed();
        assert_eq!(g.lo(), -2);
        assert_eq!(g.coeff(-2), 3.0);
        assert_eq!(g.coeff(-1), 2.0);
        assert_eq!(g.coeff(0), 1.0);
        let d = g.derivative();
        assert_eq!(d.coeff(-3), -6.0);
        assert_eq!(d.coeff(-2), -2.0);
    }
}
