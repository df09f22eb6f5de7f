//! Transmission determinant and transmission eigenvalues.
//!
//! The determinant `D` compares the regular solutions of the perturbed and
//! free problems at the edge of the support; its zeros are the transmission
//! eigenvalues. Two independent routes compute it: exact Laurent division
//! `(f_0 - g_0)/(z - 1/z)` followed by the change of variable to `λ`, and
//! the 2×2 determinant of regular solutions. Both must agree.

use num_complex::Complex64;

use super::jost::{g_from_f, jost_function};
use super::regular::{free_regulars, regular_solutions};
use super::{Potential, DIVISION_REMAINDER_TOL, ROUTE_AGREEMENT_TOL, SUM_RULE_TOL};
use crate::algebra::{laurent_to_lambda, LambdaPoly, LaurentPoly, Root, RootSet};
use crate::error::{Error, Result};

/// The transmission determinant `D` and its monic normalisation `E = D/V_b`.
#[derive(Debug, Clone)]
pub struct TransmissionDet {
    pub d: LambdaPoly,
    pub e: LambdaPoly,
}

/// Conjugate-closed multiset of the `2b - 2` transmission eigenvalues.
#[derive(Debug, Clone)]
pub struct TransmissionSpectrum {
    b: usize,
    roots: RootSet,
}

impl TransmissionSpectrum {
    pub fn b(&self) -> usize {
        self.b
    }

    /// Clustered eigenvalues with multiplicities.
    pub fn roots(&self) -> &[Root] {
        &self.roots.roots
    }

    /// All eigenvalues repeated by multiplicity (`2b - 2` entries).
    pub fn multiset(&self) -> Vec<Complex64> {
        self.roots.multiset()
    }

    pub fn count(&self) -> usize {
        self.roots.total_multiplicity()
    }

    /// Eigenvalue sum; imaginary parts cancel by conjugate closure.
    pub fn sum(&self) -> f64 {
        self.roots
            .roots
            .iter()
            .map(|r| r.multiplicity as f64 * r.location.re)
            .sum()
    }

    /// Assemble from raw eigenvalues: count must be even and at least two,
    /// and the multiset must close under conjugation (pairing tolerance
    /// `1e-9` relative). Near-real values snap onto the axis, paired values
    /// are symmetrised exactly.
    pub fn from_eigenvalues(eigs: &[Complex64]) -> Result<Self> {
        if eigs.len() < 2 || !eigs.len().is_multiple_of(2) {
            return Err(Error::OddCount { count: eigs.len() });
        }
        if eigs.iter().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
            return Err(Error::InvalidInput("eigenvalues must be finite".into()));
        }
        let scale = 1.0 + eigs.iter().fold(0.0f64, |m, e| m.max(e.norm()));
        let tol = 1e-9 * scale;

        let mut vals: Vec<Complex64> = eigs.to_vec();
        for v in vals.iter_mut() {
            if v.im.abs() <= tol {
                *v = Complex64::new(v.re, 0.0);
            }
        }
        let mut used = vec![false; vals.len()];
        for i in 0..vals.len() {
            if used[i] || vals[i].im <= 0.0 {
                continue;
            }
            let mut best: Option<(usize, f64)> = None;
            for j in 0..vals.len() {
                if used[j] || j == i || vals[j].im >= 0.0 {
                    continue;
                }
                let d = (vals[j] - vals[i].conj()).norm();
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
            match best {
                Some((j, d)) if d <= tol => {
                    let w = 0.5 * (vals[i] + vals[j].conj());
                    vals[i] = w;
                    vals[j] = w.conj();
                    used[i] = true;
                    used[j] = true;
                }
                _ => {
                    return Err(Error::NotConjugateClosed {
                        gap: best.map_or(f64::INFINITY, |(_, d)| d),
                    })
                }
            }
        }
        for (i, v) in vals.iter().enumerate() {
            if v.im != 0.0 && !used[i] {
                return Err(Error::NotConjugateClosed { gap: v.im.abs() });
            }
        }

        // cluster duplicates into multiplicities
        let mut roots: Vec<Root> = Vec::new();
        let mut taken = vec![false; vals.len()];
        for i in 0..vals.len() {
            if taken[i] {
                continue;
            }
            let mut group = vec![vals[i]];
            taken[i] = true;
            for j in (i + 1)..vals.len() {
                if !taken[j] && (vals[j] - vals[i]).norm() <= tol {
                    group.push(vals[j]);
                    taken[j] = true;
                }
            }
            let center = group.iter().sum::<Complex64>() / group.len() as f64;
            let center = if center.im.abs() <= tol {
                Complex64::new(center.re, 0.0)
            } else {
                center
            };
            roots.push(Root {
                location: center,
                multiplicity: group.len(),
            });
        }
        let b = eigs.len() / 2 + 1;
        Ok(TransmissionSpectrum {
            b,
            roots: RootSet { roots },
        })
    }

    pub(crate) fn from_roots(b: usize, roots: RootSet) -> Self {
        TransmissionSpectrum { b, roots }
    }

    /// Greatest distance from each eigenvalue of `self` to its best match in
    /// `other`, taken over a multiplicity-respecting greedy assignment.
    pub fn multiset_distance(&self, other: &TransmissionSpectrum) -> f64 {
        let mine = self.multiset();
        let mut theirs = other.multiset();
        let mut worst = 0.0f64;
        for v in mine {
            if theirs.is_empty() {
                return f64::INFINITY;
            }
            let (idx, dist) = theirs
                .iter()
                .enumerate()
                .map(|(i, w)| (i, (v - w).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            worst = worst.max(dist);
            theirs.swap_remove(idx);
        }
        if theirs.is_empty() {
            worst
        } else {
            f64::INFINITY
        }
    }
}

/// Exact division of a Laurent polynomial by `z - 1/z`.
///
/// Multiplies through by `z` and divides the resulting polynomial by
/// `z² - 1`; the remainder must vanish relative to the coefficient scale.
pub(crate) fn divide_by_z_minus_zinv(l: &LaurentPoly) -> Result<LaurentPoly> {
    if l.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let shifted = l.shifted(1);
    let lo = shifted.lo();
    let coeffs = shifted.coeffs(); // ordinary polynomial times z^lo
    let n = coeffs.len();
    if n < 3 {
        let scale = l.coeff_scale();
        return Err(Error::DivisionRemainder {
            remainder: scale,
            scale,
        });
    }
    let mut quot = vec![0.0; n - 2];
    let mut rem = coeffs.to_vec();
    for k in (2..n).rev() {
        let q = rem[k];
        quot[k - 2] = q;
        rem[k] = 0.0;
        rem[k - 2] += q; // subtract q·z^{k-2}·(z² - 1)
    }
    let scale = l.coeff_scale();
    let remainder = rem[0].abs().max(rem[1].abs());
    if remainder > DIVISION_REMAINDER_TOL * scale {
        return Err(Error::DivisionRemainder { remainder, scale });
    }
    Ok(LaurentPoly::new(lo, quot))
}

/// Transmission determinant by both routes, with the division route
/// returned and the determinant route used as a built-in check.
///
/// Requires `V_b != 0` so that the monic normalisation `E` exists.
pub fn transmission_det(v: &Potential) -> Result<TransmissionDet> {
    let vb = v.require_nonzero_edge()?;
    let f0 = jost_function(v);
    let g0 = g_from_f(&f0);
    let quotient = divide_by_z_minus_zinv(&f0.sub(&g0))?;
    let d = laurent_to_lambda(&quotient)?;

    // independent route: determinant of regular solutions at the edge
    let b = v.b();
    let phi = regular_solutions(v, b + 1);
    let free = free_regulars(b + 1);
    let det = free[b].mul(&phi[b + 1]).sub(&phi[b].mul(&free[b + 1]));
    let gap = d.max_coeff_gap(&det);
    let scale = d.coeff_scale().max(det.coeff_scale()).max(1e-300);
    if gap > ROUTE_AGREEMENT_TOL * scale {
        return Err(Error::RouteMismatch { gap, scale });
    }

    let e = d.scale(1.0 / vb);
    Ok(TransmissionDet { d, e })
}

/// Transmission eigenvalues: the clustered zeros of `E`, `2b - 2` of them
/// counting multiplicity. Verifies the trace rule
/// `Σ λ_j = 4(b-1) + Σ_{j<b} V_j` before returning.
pub fn transmission_eigenvalues(v: &Potential) -> Result<TransmissionSpectrum> {
    let det = transmission_det(v)?;
    let b = v.b();
    let expected = 2 * b - 2;
    if expected == 0 {
        return Ok(TransmissionSpectrum::from_roots(b, RootSet::default()));
    }
    if det.e.degree() != Some(expected) {
        return Err(Error::InvalidInput(format!(
            "transmission determinant has degree {:?}, expected {}",
            det.e.degree(),
            expected
        )));
    }
    let roots = det.e.roots()?;
    let spectrum = TransmissionSpectrum::from_roots(b, roots);

    let sum = spectrum.sum();
    let rule = 4.0 * (b as f64 - 1.0) + v.interior_sum();
    if (sum - rule).abs() > SUM_RULE_TOL * (1.0 + sum.abs()) {
        return Err(Error::RouteMismatch {
            gap: (sum - rule).abs(),
            scale: 1.0 + sum.abs(),
        });
    }
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_site_determinant_is_constant() {
        for &v1 in &[2.0, 0.5, -1.3] {
            let v = Potential::new(vec![v1]).unwrap();
            let det = transmission_det(&v).unwrap();
            assert_eq!(det.d.degree(), Some(0));
            assert!((det.d.coeff(0) - v1).abs() < 1e-14);
            let spec = transmission_eigenvalues(&v).unwrap();
            assert_eq!(spec.count(), 0);
        }
    }

    #[test]
    fn two_site_determinant_closed_form() {
        let (v1, v2) = (-4.0, -1.0);
        let v = Potential::new(vec![v1, v2]).unwrap();
        let det = transmission_det(&v).unwrap();
        // D = V2 λ² - V2(4+V1) λ + (V1 + 2 V1 V2 + 4 V2)
        let want = LambdaPoly::new(vec![
            v1 + 2.0 * v1 * v2 + 4.0 * v2,
            -v2 * (4.0 + v1),
            v2,
        ]);
        assert!(det.d.max_coeff_gap(&want) < 1e-12);
        // E = λ² - (4+V1) λ + (4 + 2V1 + V1/V2)
        let want_e = LambdaPoly::new(vec![4.0 + 2.0 * v1 + v1 / v2, -(4.0 + v1), 1.0]);
        assert!(det.e.max_coeff_gap(&want_e) < 1e-12);
    }

    #[test]
    fn isolated_edge_potential_determinant() {
        // V = (0, ..., 0, V_b): E equals the square of the free regular
        // solution at the edge.
        let v = Potential::new(vec![0.0, 0.0, 0.7]).unwrap();
        let det = transmission_det(&v).unwrap();
        let free3 = free_regulars(3).pop().unwrap();
        assert!(det.e.max_coeff_gap(&free3.mul(&free3)) < 1e-12);
    }

    #[test]
    fn two_site_eigenvalue_table() {
        let cases: [(f64, f64, [Complex64; 2]); 4] = [
            (-4.0, -1.0, [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)]),
            (-4.0, -0.8, [Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)]),
            (-4.0, 0.8, [Complex64::new(3.0, 0.0), Complex64::new(-3.0, 0.0)]),
            (-2.0, -1.0, [Complex64::new(1.0, 1.0), Complex64::new(1.0, -1.0)]),
        ];
        for (v1, v2, want) in cases {
            let v = Potential::new(vec![v1, v2]).unwrap();
            let spec = transmission_eigenvalues(&v).unwrap();
            let got = TransmissionSpectrum::from_eigenvalues(&want).unwrap();
            assert!(
                spec.multiset_distance(&got) < 1e-9,
                "V = ({v1}, {v2}): got {:?}",
                spec.multiset()
            );
        }
    }

    #[test]
    fn three_site_double_eigenvalues() {
        let v = Potential::new(vec![0.0, 0.0, 1.0]).unwrap();
        let spec = transmission_eigenvalues(&v).unwrap();
        assert_eq!(spec.count(), 4);
        assert_eq!(spec.roots().len(), 2);
        let mut locs: Vec<(f64, usize)> = spec
            .roots()
            .iter()
            .map(|r| (r.location.re, r.multiplicity))
            .collect();
        locs.sort_by(|a, b| a.0.total_cmp(&b.0));
        assert!((locs[0].0 - 1.0).abs() < 1e-7 && locs[0].1 == 2);
        assert!((locs[1].0 - 3.0).abs() < 1e-7 && locs[1].1 == 2);
    }

    #[test]
    fn spectrum_validation() {
        let odd = [Complex64::new(1.0, 0.0)];
        assert!(matches!(
            TransmissionSpectrum::from_eigenvalues(&odd),
            Err(Error::OddCount { .. })
        ));
        let open = [Complex64::new(1.0, 1.0), Complex64::new(2.0, -1.0)];
        assert!(matches!(
            TransmissionSpectrum::from_eigenvalues(&open),
            Err(Error::NotConjugateClosed { .. })
        ));
        let ok = [Complex64::new(1.0, 1.0), Complex64::new(1.0 + 1e-12, -1.0)];
        let spec = TransmissionSpectrum::from_eigenvalues(&ok).unwrap();
        assert_eq!(spec.b(), 2);
        let ms = spec.multiset();
        assert_eq!(ms[0].conj(), ms[1]);
    }

    #[test]
    fn division_leaves_no_remainder_for_jost_pairs() {
        let v = Potential::new(vec![0.2, -0.9, 1.4, 0.3]).unwrap();
        let f0 = jost_function(&v);
        let diff = f0.sub(&g_from_f(&f0));
        let q = divide_by_z_minus_zinv(&diff).unwrap();
        // quotient is palindromic and spans z^{-(2b-2)}..z^{2b-2}
        assert!(q.palindrome_gap() < 1e-12 * q.coeff_scale());
        assert_eq!(q.hi(), 6);
        // multiply back
        let back = q.mul(&LaurentPoly::new(-1, vec![-1.0, 0.0, 1.0]));
        assert!(back.max_coeff_gap(&diff) < 1e-12);
    }

    #[test]
    fn division_rejects_nondivisible_input() {
        let l = LaurentPoly::from_poly(vec![1.0, 1.0]);
        assert!(matches!(
            divide_by_z_minus_zinv(&l),
            Err(Error::DivisionRemainder { .. })
        ));
    }
}
