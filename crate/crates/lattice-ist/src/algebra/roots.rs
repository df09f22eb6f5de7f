//! Polynomial root finding: Aberth–Ehrlich simultaneous iteration with
//! Newton polishing, followed by multiplicity clustering and conjugate
//! pairing for real coefficients.

use num_complex::Complex64;

use super::lambda::LambdaPoly;
use super::laurent::LaurentPoly;
use super::{ABERTH_MAX_ITER, ROOT_CLUSTER_TOL, TRIM_REL};
use crate::dd::CDd;
use crate::error::{Error, Result};

/// A root location together with its clustered multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub location: Complex64,
    pub multiplicity: usize,
}

/// Roots of a real polynomial, clustered by multiplicity.
///
/// Multiplicities sum to the polynomial degree and the set is closed under
/// complex conjugation.
#[derive(Debug, Clone, Default)]
pub struct RootSet {
    pub roots: Vec<Root>,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// All roots repeated by multiplicity.
    pub fn multiset(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for r in &self.roots {
            for _ in 0..r.multiplicity {
                out.push(r.location);
            }
        }
        out
    }

    /// Roots on the real axis (after conjugate snapping these have an
    /// exactly zero imaginary part).
    pub fn real_roots(&self) -> impl Iterator<Item = (f64, usize)> + '_ {
        self.roots
            .iter()
            .filter(|r| r.location.im == 0.0)
            .map(|r| (r.location.re, r.multiplicity))
    }

    fn sort(&mut self) {
        self.roots.sort_by(|a, b| {
            (a.location.re, a.location.im)
                .partial_cmp(&(b.location.re, b.location.im))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
    }
}

/// Find all complex roots of a real polynomial given by ascending
/// coefficients.
///
/// Roots closer than `1e-7` relative distance are merged into a single
/// cluster whose location is the cluster mean (then re-polished with a
/// multiplicity-aware Newton step) and whose multiplicity is the cluster
/// size.
pub fn find_roots(coeffs: &[f64]) -> Result<RootSet> {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::InvalidInput(
            "root finding requires a nonzero polynomial with finite coefficients".into(),
        ));
    }
    let threshold = TRIM_REL * scale;
    let mut hi = coeffs.len();
    while hi > 0 && coeffs[hi - 1].abs() <= threshold {
        hi -= 1;
    }
    let mut lo = 0;
    while lo < hi && coeffs[lo].abs() <= threshold {
        lo += 1;
    }
    if hi - lo <= 1 {
        // Constant polynomial apart from origin roots.
        let mut set = RootSet::default();
        if lo > 0 {
            set.roots.push(Root {
                location: Complex64::new(0.0, 0.0),
                multiplicity: lo,
            });
        }
        if set.roots.is_empty() {
            return Err(Error::InvalidInput(
                "root finding requires degree at least one".into(),
            ));
        }
        return Ok(set);
    }

    let body = &coeffs[lo..hi];
    let approx = aberth(body)?;
    let mut set = cluster(&approx, body);
    enforce_conjugacy(&mut set, body);
    if lo > 0 {
        set.roots.push(Root {
            location: Complex64::new(0.0, 0.0),
            multiplicity: lo,
        });
    }
    set.sort();
    Ok(set)
}

impl LambdaPoly {
    /// Clustered roots; requires degree at least one.
    pub fn roots(&self) -> Result<RootSet> {
        find_roots(self.coeffs())
    }
}

impl LaurentPoly {
    /// Clustered roots of the coefficient polynomial. The power shift `lo`
    /// is ignored, so zeros at the origin induced by a positive `lo` are not
    /// reported.
    pub fn roots(&self) -> Result<RootSet> {
        find_roots(self.coeffs())
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Evaluation in complex double-double, rounded back at the end.
fn horner_compensated(coeffs: &[f64], z: Complex64) -> Complex64 {
    let zd = CDd::from_f64(z.re, z.im);
    let mut p = CDd::from_f64(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        p = p.mul(zd).add_f64(c);
    }
    let (re, im) = p.value();
    Complex64::new(re, im)
}

/// Backward-error scale for an evaluation at `z`: `Σ |c_j| |z|^j`.
fn eval_scale(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut acc = 0.0;
    let mut pw = 1.0;
    for &c in coeffs {
        acc += c.abs() * pw;
        pw *= r;
    }
    acc
}

fn aberth(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let an = coeffs[n];

    // Fujiwara upper bound for the root radius.
    let mut radius = 0.0f64;
    for (k, &c) in coeffs.iter().enumerate().take(n) {
        let bound = (c.abs() / an.abs()).powf(1.0 / (n - k) as f64);
        radius = radius.max(bound);
    }
    radius = (2.0 * radius).max(1e-3);

    let mut x: Vec<Complex64> = (0..n)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / n as f64 + 0.4;
            0.9 * radius * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    let eps = f64::EPSILON;
    for _ in 0..ABERTH_MAX_ITER {
        let mut settled = true;
        for i in 0..n {
            let (p, dp) = horner(coeffs, x[i]);
            if p.norm() <= 4.0 * eps * eval_scale(coeffs, x[i]) {
                continue; // at backward-error level already
            }
            if dp.norm() == 0.0 {
                // sitting on a critical point: nudge off it
                x[i] += Complex64::new(radius * 1e-4, radius * 1e-4);
                settled = false;
                continue;
            }
            let newton = p / dp;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = x[i] - x[j];
                    if d.norm() > 0.0 {
                        repulsion += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let w = if denom.norm() < 1e-300 { newton } else { newton / denom };
            x[i] -= w;
            if w.norm() > 1e-14 * (1.0 + x[i].norm()) {
                settled = false;
            }
        }
        if settled {
            break;
        }
    }

    // Newton polishing, accepting only steps that reduce the residual.
    for xi in x.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(coeffs, *xi);
            if dp.norm() == 0.0 {
                break;
            }
            let cand = *xi - p / dp;
            let (pc, _) = horner(coeffs, cand);
            if pc.norm() < p.norm() {
                *xi = cand;
            } else {
                break;
            }
        }
        // One compensated step: the residual at a converged root is
        // dominated by cancellation in the evaluation, so a double-double
        // Horner pass recovers the last bits. A converged point only ever
        // takes a tiny step; anything larger is left alone.
        let (_, dp) = horner(coeffs, *xi);
        if dp.norm() > 0.0 {
            let w = horner_compensated(coeffs, *xi) / dp;
            if w.norm() <= 1e-6 * (1.0 + xi.norm()) {
                *xi -= w;
            }
        }
    }

    for &xi in &x {
        let (p, _) = horner(coeffs, xi);
        if p.norm() > 1e-8 * eval_scale(coeffs, xi).max(f64::MIN_POSITIVE) {
            return Err(Error::DidNotConverge {
                iterations: ABERTH_MAX_ITER,
            });
        }
    }
    Ok(x)
}

fn cluster(points: &[Complex64], coeffs: &[f64]) -> RootSet {
    let n = points.len();
    let mut owner: Vec<usize> = (0..n).collect();
    fn find(owner: &mut Vec<usize>, i: usize) -> usize {
        if owner[i] != i {
            let r = find(owner, owner[i]);
            owner[i] = r;
        }
        owner[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let tol = ROOT_CLUSTER_TOL * (1.0 + points[i].norm().max(points[j].norm()));
            if (points[i] - points[j]).norm() <= tol {
                let (ri, rj) = (find(&mut owner, i), find(&mut owner, j));
                if ri != rj {
                    owner[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::HashMap<usize, Vec<Complex64>> = Default::default();
    for i in 0..n {
        let r = find(&mut owner, i);
        groups.entry(r).or_default().push(points[i]);
    }
    let mut set = RootSet::default();
    for group in groups.values() {
        let mut center = group.iter().sum::<Complex64>() / group.len() as f64;
        let m = group.len();
        if m > 1 {
            // Newton adapted to an m-fold root restores full accuracy from
            // the cluster mean.
            for _ in 0..3 {
                let (p, dp) = horner(coeffs, center);
                if dp.norm() == 0.0 {
                    break;
                }
                let cand = center - (m as f64) * p / dp;
                let (pc, _) = horner(coeffs, cand);
                if pc.norm() < p.norm() {
                    center = cand;
                } else {
                    break;
                }
            }
        }
        set.roots.push(Root {
            location: center,
            multiplicity: m,
        });
    }
    set
}

fn enforce_conjugacy(set: &mut RootSet, coeffs: &[f64]) {
    // Snap near-real clusters onto the axis.
    for r in set.roots.iter_mut() {
        if r.location.im != 0.0
            && r.location.im.abs() <= ROOT_CLUSTER_TOL * (1.0 + r.location.norm())
        {
            r.location = Complex64::new(r.location.re, 0.0);
            // One guarded polish on the real axis.
            let (p, dp) = horner(coeffs, r.location);
            if dp.norm() > 0.0 {
                let cand = r.location - (r.multiplicity as f64) * p / dp;
                if cand.im.abs() < 1e-300 {
                    let (pc, _) = horner(coeffs, Complex64::new(cand.re, 0.0));
                    if pc.norm() < p.norm() {
                        r.location = Complex64::new(cand.re, 0.0);
                    }
                }
            }
        }
    }
    // Pair the remaining complex clusters with their mirror images.
    let n = set.roots.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || set.roots[i].location.im <= 0.0 {
            continue;
        }
        let target = set.roots[i].location.conj();
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if used[j] || j == i || set.roots[j].location.im >= 0.0 {
                continue;
            }
            if set.roots[j].multiplicity != set.roots[i].multiplicity {
                continue;
            }
            let d = (set.roots[j].location - target).norm();
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, _)) = best {
            let w = 0.5 * (set.roots[i].location + set.roots[j].location.conj());
            set.roots[i].location = w;
            set.roots[j].location = w.conj();
            used[i] = true;
            used[j] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!(
            (a - b).norm() < tol,
            "expected {b}, got {a} (gap {})",
            (a - b).norm()
        );
    }

    #[test]
    fn simple_quadratic() {
        // λ² - 3λ - 4 has roots -1 and 4
        let set = find_roots(&[-4.0, -3.0, 1.0]).unwrap();
        assert_eq!(set.total_multiplicity(), 2);
        let mut reals: Vec<f64> = set.real_roots().map(|(r, _)| r).collect();
        reals.sort_by(f64::total_cmp);
        assert!((reals[0] + 1.0).abs() < 1e-12);
        assert!((reals[1] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn double_root_clusters() {
        // (λ - 2)²
        let set = find_roots(&[4.0, -4.0, 1.0]).unwrap();
        assert_eq!(set.roots.len(), 1);
        assert_eq!(set.roots[0].multiplicity, 2);
        assert_close(set.roots[0].location, Complex64::new(2.0, 0.0), 1e-7);
    }

    #[test]
    fn quartic_with_two_double_roots() {
        // (λ-1)²(λ-3)² = λ⁴ - 8λ³ + 22λ² - 24λ + 9
        let set = find_roots(&[9.0, -24.0, 22.0, -8.0, 1.0]).unwrap();
        assert_eq!(set.roots.len(), 2);
        for r in &set.roots {
            assert_eq!(r.multiplicity, 2);
            assert_eq!(r.location.im, 0.0);
        }
        // double roots are only determined to ~sqrt(eps) in f64
        let mut locs: Vec<f64> = set.roots.iter().map(|r| r.location.re).collect();
        locs.sort_by(f64::total_cmp);
        assert!((locs[0] - 1.0).abs() < 1e-7);
        assert!((locs[1] - 3.0).abs() < 1e-7);
    }

    #[test]
    fn conjugate_pair_is_exact() {
        // λ² - 2λ + 2 has roots 1 ± i
        let set = find_roots(&[2.0, -2.0, 1.0]).unwrap();
        assert_eq!(set.roots.len(), 2);
        let a = set.roots[0].location;
        let b = set.roots[1].location;
        assert_eq!(a.conj(), b);
        assert_close(a, Complex64::new(1.0, -1.0), 1e-12);
    }

    #[test]
    fn quartic_mixed_spectrum() {
        // roots of λ⁴ - 8λ³ + 15λ² + 4γλ + ... with γ=7, ε=6:
        // E = λ⁴ - 8λ³ + 15λ² + 10λ - 24
        let set = find_roots(&[-24.0, 10.0, 15.0, -8.0, 1.0]).unwrap();
        let mut reals: Vec<f64> = set.real_roots().map(|(r, _)| r).collect();
        reals.sort_by(f64::total_cmp);
        let expected = [-1.17740967879, 1.32163716784, 3.85577251096, 4.0];
        assert_eq!(reals.len(), 4);
        for (r, e) in reals.iter().zip(expected.iter()) {
            assert!((r - e).abs() < 1e-4, "{r} vs {e}");
        }
    }

    #[test]
    fn origin_roots_are_stripped() {
        // z³ - z² - 5z = z(z² - z - 5)
        let set = find_roots(&[0.0, -5.0, -1.0, 1.0]).unwrap();
        assert_eq!(set.total_multiplicity(), 3);
        assert!(set
            .roots
            .iter()
            .any(|r| r.location.norm() == 0.0 && r.multiplicity == 1));
    }

    #[test]
    fn residual_bound_holds() {
        let coeffs = [0.125, -2.5, 3.0, -0.5, 1.0, 2.0];
        let set = find_roots(&coeffs).unwrap();
        assert_eq!(set.total_multiplicity(), 5);
        let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        for r in &set.roots {
            let (p, _) = super::horner(&coeffs, r.location);
            assert!(p.norm() <= 1e-8 * scale * super::eval_scale(&coeffs, r.location).max(1.0));
        }
    }

    #[test]
    fn rejects_constants() {
        assert!(find_roots(&[3.0]).is_err());
        assert!(find_roots(&[0.0]).is_err());
    }
}
