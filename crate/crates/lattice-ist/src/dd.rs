//! Minimal double-double arithmetic for compensated accumulation.
//!
//! The Marchenko kernel contracts the Taylor coefficients of `1/f_0`, which
//! grow like the reciprocal of the innermost Jost zero raised to `2b - 1`,
//! against the Jost coefficients; the bounded result emerges from
//! cancellation of large intermediates. Carrying roughly 32 digits through
//! that one recurrence keeps the kernel at full double accuracy. Interfaces
//! stay `f64`; this type never leaves the crate.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let lo = e + self.lo + other.lo;
        let (hi, lo) = two_sum(s, lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let lo = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = two_sum(p, lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        self.mul(Dd::from(x))
    }

    /// Newton-refined division.
    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (hi, lo) = two_sum(q1, q2);
        let (hi, lo2) = two_sum(hi, q3 + lo);
        Dd { hi, lo: lo2 }
    }
}

/// Complex double-double, used for one compensated Newton step when
/// polishing polynomial roots.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    #[inline]
    pub fn from_f64(re: f64, im: f64) -> CDd {
        CDd {
            re: Dd::from(re),
            im: Dd::from(im),
        }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> CDd {
        CDd {
            re: self.re.add(Dd::from(x)),
            im: self.im,
        }
    }

    #[inline]
    pub fn mul(self, other: CDd) -> CDd {
        CDd {
            re: self.re.mul(other.re).sub(self.im.mul(other.im)),
            im: self.re.mul(other.im).add(self.im.mul(other.re)),
        }
    }

    #[inline]
    pub fn value(self) -> (f64, f64) {
        (self.re.value(), self.im.value())
    }
}
