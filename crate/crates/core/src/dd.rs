//! Minimal double-double arithmetic (~31 significant digits).
//!
//! Used by the hypergeometric inner loop, where the partial sums of a
//! pure-imaginary-argument series reach 1e6–1e8 while the result is O(1):
//! plain f64 terms would leak rounding error of order `eps * peak` into the
//! final value. Algorithms are the classical error-free transformations
//! (Knuth two-sum, FMA two-product) and the add/mul/div kernels from
//! Bailey's QD library.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = libm::fma(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles as a double-double.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from_f64(q3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_round_trips() {
        let third = Dd::ONE.div(Dd::from_f64(3.0));
        let one = third.mul_f64(3.0);
        assert!((one.to_f64() - 1.0).abs() < 1e-31);
        // lo captures the part f64 cannot: 1/3 - fl(1/3) != 0
        assert!(third.lo != 0.0);
    }

    #[test]
    fn two_prod_exact() {
        // (1 + 2^-27)^2 = 1 + 2^-26 + 2^-54; the tail is below f64 resolution
        let x = 1.0 + (2.0_f64).powi(-27);
        let p = Dd::from_f64(x).mul(Dd::from_f64(x));
        let err = (2.0_f64).powi(-54);
        assert_eq!(p.lo, err);
    }

    #[test]
    fn add_cancellation() {
        // (1e16 + 1) - 1e16 must recover the 1 exactly
        let a = Dd::from_sum(1e16, 1.0);
        let b = a.sub(Dd::from_f64(1e16));
        assert_eq!(b.to_f64(), 1.0);
    }
}
