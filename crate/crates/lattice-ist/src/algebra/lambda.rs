//! Dense real polynomials in the spectral parameter `λ`.

use num_complex::Complex64;

use super::TRIM_REL;

/// Real polynomial in `λ`, stored by ascending power.
///
/// The zero polynomial is the empty coefficient vector. Constructors trim
/// leading coefficients whose magnitude falls below `1e-12` of the largest
/// coefficient, so the leading coefficient of a nonzero polynomial is always
/// significant.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaPoly {
    coeffs: Vec<f64>,
}

impl LambdaPoly {
    /// Build from ascending coefficients `c0 + c1 λ + c2 λ² + ...`.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = LambdaPoly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LambdaPoly { coeffs: vec![1.0] }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear factor `λ - r`.
    pub fn linear_root(r: f64) -> Self {
        LambdaPoly {
            coeffs: vec![-r, 1.0],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `λ^j` (zero outside the stored range).
    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Largest coefficient magnitude; zero for the zero polynomial.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> LambdaPoly {
        if self.coeffs.len() <= 1 {
            return LambdaPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| j as f64 * c)
            .collect();
        LambdaPoly::new(coeffs)
    }

    pub fn scale(&self, s: f64) -> LambdaPoly {
        LambdaPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn neg(&self) -> LambdaPoly {
        self.scale(-1.0)
    }

    pub fn add(&self, other: &LambdaPoly) -> LambdaPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) + other.coeff(j)).collect();
        LambdaPoly::new(coeffs)
    }

    pub fn sub(&self, other: &LambdaPoly) -> LambdaPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) - other.coeff(j)).collect();
        LambdaPoly::new(coeffs)
    }

    pub fn mul(&self, other: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || other.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::new(coeffs)
    }

    /// Maximum absolute coefficient difference against `other`.
    pub fn max_coeff_gap(&self, other: &LambdaPoly) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|j| (self.coeff(j) - other.coeff(j)).abs())
            .fold(0.0, f64::max)
    }

    fn normalize(&mut self) {
        let scale = self.coeff_scale();
        if scale == 0.0 || !scale.is_finite() {
            if !scale.is_finite() {
                return; // keep non-finite data visible instead of masking it
            }
            self.coeffs.clear();
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
    }
}

impl std::fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
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
            match j {
                0 => write!(f, "{a}")?,
                1 if a == 1.0 => write!(f, "λ")?,
                1 => write!(f, "{a} λ")?,
                _ if a == 1.0 => write!(f, "λ^{j}")?,
                _ => write!(f, "{a} λ^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let p = LambdaPoly::new(vec![-4.0, -3.0, 1.0]); // λ² - 3λ - 4
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(4.0), 0.0);
        assert_eq!(p.eval(-1.0), 0.0);
        let q = p.mul(&LambdaPoly::linear_root(2.0));
        assert_eq!(q.degree(), Some(3));
        assert_eq!(q.eval(2.0), 0.0);
        assert_eq!(p.derivative().coeffs(), &[-3.0, 2.0]);
    }

    #[test]
    fn zero_polynomial_behaviour() {
        let z = LambdaPoly::zero();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.eval(3.0), 0.0);
        assert!(z.mul(&LambdaPoly::one()).is_zero());
        assert_eq!(LambdaPoly::new(vec![0.0, 0.0]), z);
    }

    #[test]
    fn trims_negligible_leading_coefficients() {
        let p = LambdaPoly::new(vec![1.0, 2.0, 1e-15]);
        assert_eq!(p.degree(), Some(1));
    }
}
