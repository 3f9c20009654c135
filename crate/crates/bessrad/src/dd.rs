// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Double-double arithmetic: an unevaluated sum of two `f64` carrying
//! roughly 31 significant decimal digits.
//!
//! The alternating series evaluated by this crate cancel down by a factor
//! of about `e^z` at argument `z`, which destroys plain `f64` accumulation
//! long before the large-argument expansions become accurate. Carrying the
//! coefficient recurrence and the accumulation in double-double closes that
//! gap: the worst-case absolute error at the hand-over point `z = 40` stays
//! near `1e-14`.
//!
//! The classic error-free transformations are used: Knuth's `two_sum`,
//! and Dekker's split-based `two_prod`, deliberately avoiding an `fma`
//! dependency so results are identical on every target.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    /// Leading component.
    pub hi: f64,
    /// Trailing error component.
    pub lo: f64,
}

/// Splitter constant `2^27 + 1` for Dekker's algorithm.
const SPLITTER: f64 = 134_217_729.0;

/// Error-free sum: returns `(s, e)` with `s = fl(a + b)` and `a + b = s + e`
/// exactly. No magnitude ordering required.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| >= |b|` (or `a == 0`).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Splits `a` into high and low halves with at most 26 mantissa bits each.
#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    let lo = a - hi;
    (hi, lo)
}

/// Error-free product: returns `(p, e)` with `p = fl(a * b)` and
/// `a * b = p + e` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

impl Dd {
    /// One.
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// Lifts an `f64` exactly.
    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two `f64`.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    /// Exact product of two `f64`.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    /// Rounds to the nearest `f64`.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Absolute value of the leading component (cheap magnitude probe).
    #[inline]
    pub fn abs_hi(self) -> f64 {
        self.hi.abs()
    }

    /// Double-double addition (Knuth-style, ~31 accurate digits).
    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    /// Double-double negation.
    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    /// Double-double subtraction.
    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    /// Double-double multiplication.
    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Multiplication by a plain `f64`.
    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Double-double division via two correction steps.
    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference: evaluate in integer arithmetic where possible.
    #[test]
    fn error_free_transforms_are_exact() {
        let (s, e) = two_sum(1.0, 1e-20);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-20);

        // 2^30 + 1 squared = 2^60 + 2^31 + 1; the low part must carry what
        // the high part drops.
        let a = (1u64 << 30) as f64 + 1.0;
        let (p, e) = two_prod(a, a);
        let exact = (1u128 << 60) + (1u128 << 31) + 1;
        assert_eq!(p as u128 + e as u128, exact);
    }

    #[test]
    fn add_tracks_tiny_components() {
        // (1 + 1e-20) - 1 == 1e-20 only if the low word is preserved.
        let one_plus = Dd::from_f64(1.0).add(Dd::from_f64(1e-20));
        let diff = one_plus.sub(Dd::from_f64(1.0));
        assert_eq!(diff.to_f64(), 1e-20);
    }

    #[test]
    fn mul_and_div_roundtrip() {
        let a = Dd::from_sum(std::f64::consts::PI, 1.2e-17);
        let b = Dd::from_sum(std::f64::consts::E, -3.4e-18);
        let q = a.mul(b).div(b);
        let err = q.sub(a);
        assert!(err.to_f64().abs() < 1e-30, "err = {:e}", err.to_f64());
    }

    #[test]
    fn cancellation_survives_at_31_digits() {
        // Sum an alternating pair that cancels to 1e-25: plain f64 loses it
        // entirely, double-double keeps ~6 digits of it.
        let big = Dd::from_f64(1e6);
        let small = Dd::from_sum(-1e6, 1e-25);
        let sum = big.add(small);
        let rel = (sum.to_f64() - 1e-25).abs() / 1e-25;
        assert!(rel < 1e-5, "rel = {rel:e}");
    }

    #[test]
    fn div_matches_reference() {
        let a = Dd::from_f64(1.0);
        let b = Dd::from_f64(3.0);
        let third = a.div(b);
        // 1/3 in double-double: hi is the f64 nearest 1/3, lo corrects it.
        assert_eq!(third.hi, 1.0 / 3.0);
        let back = third.mul_f64(3.0);
        assert!((back.to_f64() - 1.0).abs() < 1e-31);
    }
}
