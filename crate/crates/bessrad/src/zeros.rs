// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Positive zeros of the derivative series and of the auxiliary functions
//! built from it, plus an interlacing checker.
//!
//! Every family reduces to one weighted section `A_w(x^2/4)` (see
//! [`crate::series`]): the scan runs in the `x`-variable for all of them
//! and only the reported value differs (families living on the squared
//! variable report `x^2`). Each zero is certified by a small residual
//! relative to the local derivative, and consecutive zeros must be
//! clearly separated; violations surface as [`Error::IllConditioned`]
//! rather than silently wrong sequences.

use crate::error::{Error, Result};
use crate::params::{Order, TruncationPolicy};
use crate::series::{self, Weights};
use crate::tolerances;

/// Which zero sequence to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroFamily {
    /// Zeros of the `n`th derivative of the Bessel function itself (the
    /// `j`-sequence of the parameter pair).
    JDeriv,
    /// Zeros of `g'`, the derivative of the linear normalization.
    GPrime,
    /// Zeros of `h'` in the squared variable.
    HPrime,
    /// Zeros of `(z g')'`, the convexity numerator of `g`.
    Delta,
    /// Zeros of `(Z h')'` in the squared variable, the convexity
    /// numerator of `h`.
    Theta,
}

impl ZeroFamily {
    /// Section weight whose zeros this family collects.
    fn weights(self) -> Weights {
        match self {
            ZeroFamily::JDeriv => Weights::ONE,
            ZeroFamily::GPrime => Weights::new([1.0, 2.0, 0.0, 0.0]),
            ZeroFamily::HPrime => Weights::new([1.0, 1.0, 0.0, 0.0]),
            ZeroFamily::Delta => Weights::new([1.0, 4.0, 4.0, 0.0]),
            ZeroFamily::Theta => Weights::new([1.0, 2.0, 1.0, 0.0]),
        }
    }

    /// Whether the family reports zeros in the squared variable.
    pub fn squared_variable(self) -> bool {
        matches!(self, ZeroFamily::HPrime | ZeroFamily::Theta)
    }

    /// Short stable name, used in diagnostics and CLI output.
    pub fn name(self) -> &'static str {
        match self {
            ZeroFamily::JDeriv => "j-deriv",
            ZeroFamily::GPrime => "g-prime",
            ZeroFamily::HPrime => "h-prime",
            ZeroFamily::Delta => "g-convex",
            ZeroFamily::Theta => "h-convex",
        }
    }
}

/// A refined, certified sequence of consecutive positive zeros.
#[derive(Debug, Clone)]
pub struct ZeroSequence {
    pub which: ZeroFamily,
    pub nu: f64,
    pub n: u32,
    /// Zeros in increasing order, in the family's own variable.
    pub zeros: Vec<f64>,
    /// Relative accuracy the refinement certifies.
    pub refine_tol: f64,
}

impl ZeroSequence {
    /// The smallest positive zero.
    pub fn first(&self) -> f64 {
        self.zeros[0]
    }
}

/// Report of a pairwise interlacing check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacingReport {
    pub interlaced: bool,
    /// 1-based position in the merged chain `a1, b1, a2, b2, ...` of the
    /// first comparison that fails strict increase, if any.
    pub first_violation: Option<usize>,
}

/// Value and derivative of the scanned section at `x`, plus the noise
/// floor of the value.
fn value_and_slope(
    nu: f64,
    n: u32,
    pair: &[Weights; 2],
    x: f64,
    policy: &TruncationPolicy,
) -> Result<(f64, f64, f64)> {
    let s = series::sections_z(nu, n, pair, x, policy)?;
    Ok((s.values[0], 2.0 / x * s.values[1], s.noise[0]))
}

/// Bisect then Newton-polish one bracketed simple zero. `fa` and `fb`
/// must have opposite signs.
fn refine_zero(
    nu: f64,
    n: u32,
    pair: &[Weights; 2],
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    policy: &TruncationPolicy,
) -> Result<f64> {
    while b - a > tolerances::BISECT_TOL * b.max(1.0) {
        let mid = 0.5 * (a + b);
        let (fm, _, _) = value_and_slope(nu, n, pair, mid, policy)?;
        if fm == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let mut x = 0.5 * (a + b);
    let (mut fx, mut dfx, _) = value_and_slope(nu, n, pair, x, policy)?;
    for _ in 0..2 {
        if dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        if !(next > a && next < b) {
            break;
        }
        let (fn_, dfn, _) = value_and_slope(nu, n, pair, next, policy)?;
        if fn_.abs() >= fx.abs() {
            break;
        }
        // Keep the bracket valid while stepping.
        if (fn_ > 0.0) == (fa > 0.0) {
            a = next;
            fa = fn_;
        } else {
            b = next;
        }
        x = next;
        fx = fn_;
        dfx = dfn;
    }
    // Residual certificate: the value at the reported zero must be tiny
    // against the local slope times the scale of the abscissa.
    if dfx != 0.0
        && fx.abs() > tolerances::ZERO_RESIDUAL_FACTOR * dfx.abs() * x.max(1.0)
    {
        return Err(Error::IllConditioned(format!(
            "zero near {x} failed its residual certificate: |F| = {}, |F'| = {}",
            fx.abs(),
            dfx.abs()
        )));
    }
    Ok(x)
}

/// First `count` positive zeros of the family's section in the
/// `x`-variable.
fn scan_zeros_x(
    nu: f64,
    n: u32,
    w: Weights,
    count: usize,
    policy: &TruncationPolicy,
) -> Result<Vec<f64>> {
    let pair = [w, w.times_m()];
    let limit = nu + n as f64 + 12.0 + (count as f64 + 12.0) * std::f64::consts::PI;
    let mut found = Vec::with_capacity(count);
    let mut x = tolerances::SCAN_START;
    let (mut fx, _, noise) = value_and_slope(nu, n, &pair, x, policy)?;
    if fx.abs() <= noise {
        // Scan abscissa happens to sit on a zero: nudge once.
        x += tolerances::SCAN_STEP * 1e-3;
        fx = value_and_slope(nu, n, &pair, x, policy)?.0;
    }
    while found.len() < count {
        let next = x + tolerances::SCAN_STEP;
        if next > limit {
            return Err(Error::ScanExhausted {
                limit,
                found: found.len(),
                requested: count,
            });
        }
        let (mut fnx, _, nnx) = value_and_slope(nu, n, &pair, next, policy)?;
        let mut next_eff = next;
        if fnx.abs() <= nnx {
            next_eff = next + tolerances::SCAN_STEP * 1e-3;
            let v = value_and_slope(nu, n, &pair, next_eff, policy)?;
            fnx = v.0;
        }
        if (fnx > 0.0) != (fx > 0.0) {
            let zero = refine_zero(nu, n, &pair, x, next_eff, fx, policy)?;
            if let Some(&prev) = found.last() {
                if zero - prev
                    <= tolerances::SEPARATION_FACTOR * tolerances::REFINE_TOL * zero.max(1.0)
                {
                    return Err(Error::IllConditioned(format!(
                        "zeros at {prev} and {zero} are not separated"
                    )));
                }
            }
            found.push(zero);
        }
        x = next_eff;
        fx = fnx;
    }
    Ok(found)
}

/// First `count` positive zeros of the chosen family for the given
/// parameters, in increasing order, in the family's own variable.
///
/// # Errors
///
/// [`Error::ScanExhausted`] if fewer than `count` zeros exist below the
/// scan cap (should not happen for these families, which all have
/// infinitely many positive zeros); [`Error::IllConditioned`] if a zero
/// fails its residual certificate or two zeros collide.
pub fn find_zeros(
    which: ZeroFamily,
    order: &Order,
    count: usize,
    policy: &TruncationPolicy,
) -> Result<ZeroSequence> {
    if count == 0 {
        return Err(Error::Domain("requested zero count must be >= 1".to_string()));
    }
    let (nu, n) = (order.nu(), order.n());
    let xs = scan_zeros_x(nu, n, which.weights(), count, policy)?;
    let zeros = if which.squared_variable() {
        xs.iter().map(|&x| x * x).collect()
    } else {
        xs
    };
    Ok(ZeroSequence {
        which,
        nu,
        n,
        zeros,
        refine_tol: tolerances::REFINE_TOL,
    })
}

/// Smallest positive zero of the family, in the family's own variable.
pub fn first_zero(
    which: ZeroFamily,
    order: &Order,
    policy: &TruncationPolicy,
) -> Result<f64> {
    Ok(find_zeros(which, order, 1, policy)?.first())
}

/// Checks the interlacing pattern `a1 < b1 < a2 < b2 < ...` over the
/// common length of the two sequences.
///
/// # Errors
///
/// [`Error::LengthMismatch`] unless `a` has at least two entries and `b`
/// at least `a.len() - 1`.
pub fn check_interlacing(a: &[f64], b: &[f64]) -> Result<InterlacingReport> {
    if a.len() < 2 || b.len() + 1 < a.len() {
        return Err(Error::LengthMismatch(format!(
            "interlacing check needs |a| >= 2 and |b| >= |a| - 1, got |a| = {}, |b| = {}",
            a.len(),
            b.len()
        )));
    }
    let mut chain = Vec::with_capacity(a.len() + b.len());
    for i in 0..a.len() {
        chain.push(a[i]);
        if i < b.len() {
            chain.push(b[i]);
        }
    }
    for i in 1..chain.len() {
        if chain[i] <= chain[i - 1] {
            return Ok(InterlacingReport {
                interlaced: false,
                first_violation: Some(i),
            });
        }
    }
    Ok(InterlacingReport {
        interlaced: true,
        first_violation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::TruncationPolicy;

    const POLICY: TruncationPolicy = TruncationPolicy {
        rel_tol: 1e-15,
        abs_tol: 1e-300,
        max_terms: 500,
        consecutive_small: 3,
    };

    // Reference zeros of J_0 and J_1 (Newton-refined classical values).
    const J0_ZEROS: [f64; 5] = [
        2.404825557695773,
        5.520078110286311,
        8.653727912911013,
        11.791534439014281,
        14.930917708487787,
    ];
    const J1_ZEROS: [f64; 5] = [
        3.831705970207512,
        7.015586669815613,
        10.173468135062722,
        13.323691936314223,
        16.470630050877634,
    ];

    #[test]
    fn plain_bessel_zeros_are_reproduced() {
        let order = Order::new(0.0, 0).unwrap();
        let seq = find_zeros(ZeroFamily::JDeriv, &order, 5, &POLICY).unwrap();
        for (z, want) in seq.zeros.iter().zip(J0_ZEROS) {
            assert!((z - want).abs() < 1e-9, "{z} vs {want}");
        }
        let order = Order::new(1.0, 0).unwrap();
        let seq = find_zeros(ZeroFamily::JDeriv, &order, 5, &POLICY).unwrap();
        for (z, want) in seq.zeros.iter().zip(J1_ZEROS) {
            assert!((z - want).abs() < 1e-9, "{z} vs {want}");
        }
    }

    #[test]
    fn half_integer_zeros_at_multiples_of_pi() {
        // J_{1/2} vanishes exactly at k pi.
        let order = Order::new(0.5, 0).unwrap();
        let seq = find_zeros(ZeroFamily::JDeriv, &order, 20, &POLICY).unwrap();
        for (k, z) in seq.zeros.iter().enumerate() {
            let want = (k + 1) as f64 * std::f64::consts::PI;
            assert!((z - want).abs() < 1e-9 * want, "{z} vs {want}");
        }
        // J_{3/2} first zero solves tan x = x.
        let order = Order::new(1.5, 0).unwrap();
        let first = first_zero(ZeroFamily::JDeriv, &order, &POLICY).unwrap();
        assert!((first - 4.493409457909064).abs() < 1e-9);
        // And a fractional order: first zero of J_{5/2}.
        let order = Order::new(2.5, 0).unwrap();
        let first = first_zero(ZeroFamily::JDeriv, &order, &POLICY).unwrap();
        assert!((first - 5.76345919689455).abs() < 1e-8, "{first}");
    }

    #[test]
    fn derivative_family_crosscheck() {
        // The squared-variable convexity numerator must equal the central
        // difference of Z -> Z * h'(Z) computed from its own section.
        let order = Order::new(2.5, 1).unwrap();
        let (nu, n) = (order.nu(), order.n());
        let w_hp = Weights::new([1.0, 1.0, 0.0, 0.0]);
        let w_theta = Weights::new([1.0, 2.0, 1.0, 0.0]);
        let zh = |big: f64| -> f64 {
            big * series::sections_big(nu, n, &[w_hp], big, &POLICY).unwrap().values[0]
        };
        for &big in &[0.8, 3.0, 9.5] {
            let h = 1e-5 * big;
            let numeric = (zh(big + h) - zh(big - h)) / (2.0 * h);
            let theta = series::sections_big(nu, n, &[w_theta], big, &POLICY)
                .unwrap()
                .values[0];
            assert!(
                (numeric - theta).abs() < 1e-6 * theta.abs().max(1.0),
                "Z = {big}: {numeric} vs {theta}"
            );
        }
    }

    #[test]
    fn auxiliary_families_order_correctly() {
        // For each admissible pair the g-convexity zero precedes the
        // g-derivative zero, which precedes the plain zero; same for the
        // squared-variable family against the squared plain zero.
        for &(nu, n) in &[(2.5f64, 1u32), (3.5, 0), (3.5, 2)] {
            let order = Order::new(nu, n).unwrap();
            let j1 = first_zero(ZeroFamily::JDeriv, &order, &POLICY).unwrap();
            let gamma1 = first_zero(ZeroFamily::GPrime, &order, &POLICY).unwrap();
            let d1 = first_zero(ZeroFamily::Delta, &order, &POLICY).unwrap();
            assert!(d1 < gamma1 && gamma1 < j1, "(nu={nu}, n={n}): {d1}, {gamma1}, {j1}");
            let delta1 = first_zero(ZeroFamily::HPrime, &order, &POLICY).unwrap();
            let l1 = first_zero(ZeroFamily::Theta, &order, &POLICY).unwrap();
            assert!(
                l1 < delta1 && delta1 < j1 * j1,
                "(nu={nu}, n={n}): {l1}, {delta1}, {}",
                j1 * j1
            );
        }
    }

    #[test]
    fn interlacing_detects_order_and_violations() {
        let a = [1.0, 3.0, 5.0];
        let b = [2.0, 4.0, 6.0];
        let rep = check_interlacing(&a, &b).unwrap();
        assert!(rep.interlaced && rep.first_violation.is_none());

        // Identical sequences violate at the very first comparison.
        let rep = check_interlacing(&a, &a).unwrap();
        assert!(!rep.interlaced);
        assert_eq!(rep.first_violation, Some(1));

        // A late violation is indexed in merged-chain position.
        let b_bad = [2.0, 4.0, 4.5];
        let a_bad = [1.0, 3.0, 4.7, 4.6];
        let rep = check_interlacing(&a_bad, &b_bad).unwrap();
        assert!(!rep.interlaced);

        assert!(matches!(
            check_interlacing(&[1.0], &b),
            Err(Error::LengthMismatch(_))
        ));
    }

    #[test]
    fn bessel_derivative_zeros_interlace() {
        let order = Order::new(2.5, 1).unwrap();
        let inner = find_zeros(ZeroFamily::JDeriv, &order, 10, &POLICY).unwrap();
        let outer = find_zeros(
            ZeroFamily::JDeriv,
            &Order::new(2.5, 2).unwrap(),
            10,
            &POLICY,
        )
        .unwrap();
        // Zeros of the higher derivative interlace those of the lower:
        // j(n+1)_1 < j(n)_1 < j(n+1)_2 < ... for nu > n.
        let rep = check_interlacing(&outer.zeros, &inner.zeros).unwrap();
        assert!(rep.interlaced, "violation at {:?}", rep.first_violation);
    }
}
