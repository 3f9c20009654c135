// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Reciprocal power sums over zero families, in closed form and
//! numerically, and the radius bounds they induce.
//!
//! Writing the normalized series as a product over its positive zeros
//! (in the `u = z^2/4` variable) and comparing coefficients gives closed
//! forms for the first two reciprocal power sums of every zero family in
//! terms of the first two series coefficients. With
//!
//! ```text
//! c1 = (nu+2) / (4 (nu-n+1)(nu-n+2))
//! c2 = (nu+3)(nu+4) / (32 (nu-n+1)(nu-n+2)(nu-n+3)(nu-n+4))
//! ```
//!
//! the sums over the plain zeros `j_k`, the zeros `gamma_k` of `g'`, the
//! squared-variable zeros `delta_k` of `h'`, and the convexity-numerator
//! zeros `d_k` and `l_k` are:
//!
//! | family   | first sum                  | second sum                      |
//! |----------|----------------------------|---------------------------------|
//! | `j`      | `sum 1/j^2  = c1`          | `sum 1/j^4  = c1^2 - 2 c2`      |
//! | `gamma`  | `sum 1/g^2  = 3 c1`        | `sum 1/g^4  = 9 c1^2 - 10 c2`   |
//! | `delta`  | `sum 1/d    = 2 c1`        | `sum 1/d^2  = 4 c1^2 - 6 c2`    |
//! | `d`      | `sum 1/d^2  = 9 c1`        | `sum 1/d^4  = 81 c1^2 - 50 c2`  |
//! | `l`      | `sum 1/l    = 4 c1`        | `sum 1/l^2  = 16 c1^2 - 18 c2`  |
//!
//! The induced bounds on the first zero `x1` of a family are the classical
//! power-sum enclosures `S_1^{-1} <= x1 <= S_1/S_2` (in the variable the
//! family lives on), which bound the order-zero radii.

use crate::error::Result;
use crate::params::{Order, TruncationPolicy};
use crate::zeros::{self, ZeroFamily};

/// A closed-form reciprocal power sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumFamily {
    /// `sum 1/j_k^2` over the positive zeros of the derivative.
    J2,
    /// `sum 1/j_k^4`.
    J4,
    /// `sum 1/gamma_k^2` over the zeros of `g'`.
    Sigma1,
    /// `sum 1/gamma_k^4`.
    Sigma2,
    /// `sum 1/delta_k` over the squared-variable zeros of `h'`.
    Rho1,
    /// `sum 1/delta_k^2`.
    Rho2,
    /// `sum 1/d_k^2` over the zeros of `(z g')'`.
    Kappa1,
    /// `sum 1/d_k^4`.
    Kappa2,
    /// `sum 1/l_k` over the squared-variable zeros of `(Z h')'`.
    Omega1,
    /// `sum 1/l_k^2`.
    Omega2,
}

impl SumFamily {
    /// Short stable name used in output.
    pub fn name(self) -> &'static str {
        match self {
            SumFamily::J2 => "j2",
            SumFamily::J4 => "j4",
            SumFamily::Sigma1 => "sigma1",
            SumFamily::Sigma2 => "sigma2",
            SumFamily::Rho1 => "rho1",
            SumFamily::Rho2 => "rho2",
            SumFamily::Kappa1 => "kappa1",
            SumFamily::Kappa2 => "kappa2",
            SumFamily::Omega1 => "omega1",
            SumFamily::Omega2 => "omega2",
        }
    }
}

/// Pair selector for [`auxiliary_sums`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxFamily {
    /// Sums over the zeros of `g'`.
    Sigma,
    /// Sums over the squared-variable zeros of `h'`.
    Rho,
    /// Sums over the zeros of `(z g')'`.
    Kappa,
    /// Sums over the squared-variable zeros of `(Z h')'`.
    Omega,
}

/// One evaluated sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumValue {
    pub family: SumFamily,
    pub nu: f64,
    pub n: u32,
    pub value: f64,
}

/// Which radius a bounds pair encloses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsTarget {
    /// Radius of starlikeness of `g` (equivalently the first zero of `g'`).
    StarlikeG,
    /// Radius of starlikeness of `h`, in the squared variable.
    StarlikeH,
    /// Radius of convexity of `g`.
    ConvexG,
    /// Radius of convexity of `h`, in the squared variable.
    ConvexH,
}

impl BoundsTarget {
    /// Short stable name used in output.
    pub fn name(self) -> &'static str {
        match self {
            BoundsTarget::StarlikeG => "starlike-g",
            BoundsTarget::StarlikeH => "starlike-h",
            BoundsTarget::ConvexG => "convex-g",
            BoundsTarget::ConvexH => "convex-h",
        }
    }
}

/// Lower and upper bounds for an order-zero radius, with an optional
/// second, coarser upper bound available for the starlike targets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsPair {
    pub target: BoundsTarget,
    pub nu: f64,
    pub n: u32,
    pub lower: f64,
    pub upper: f64,
    pub extra_upper: Option<f64>,
}

/// First series coefficient in the `u`-variable, divided by 4 (i.e. the
/// value of `sum 1/j_k^2`).
fn c1(order: &Order) -> f64 {
    let (nu, q) = (order.nu(), order.nu_minus_n());
    (nu + 2.0) / (4.0 * (q + 1.0) * (q + 2.0))
}

/// Second series coefficient in the `u`-variable, divided by 16.
fn c2(order: &Order) -> f64 {
    let (nu, q) = (order.nu(), order.nu_minus_n());
    (nu + 3.0) * (nu + 4.0)
        / (32.0 * (q + 1.0) * (q + 2.0) * (q + 3.0) * (q + 4.0))
}

fn closed_form(family: SumFamily, order: &Order) -> f64 {
    let c1 = c1(order);
    let c2 = c2(order);
    match family {
        SumFamily::J2 => c1,
        SumFamily::J4 => c1 * c1 - 2.0 * c2,
        SumFamily::Sigma1 => 3.0 * c1,
        SumFamily::Sigma2 => 9.0 * c1 * c1 - 10.0 * c2,
        SumFamily::Rho1 => 2.0 * c1,
        SumFamily::Rho2 => 4.0 * c1 * c1 - 6.0 * c2,
        SumFamily::Kappa1 => 9.0 * c1,
        SumFamily::Kappa2 => 81.0 * c1 * c1 - 50.0 * c2,
        SumFamily::Omega1 => 4.0 * c1,
        SumFamily::Omega2 => 16.0 * c1 * c1 - 18.0 * c2,
    }
}

/// Closed-form `sum 1/j_k^power` over the positive zeros of the
/// derivative, `power` in `{2, 4}`.
pub fn zero_power_sum(order: &Order, power: u32) -> Result<SumValue> {
    let family = match power {
        2 => SumFamily::J2,
        4 => SumFamily::J4,
        _ => {
            return Err(crate::error::Error::Domain(format!(
                "closed forms exist for powers 2 and 4, got {power}"
            )))
        }
    };
    Ok(SumValue {
        family,
        nu: order.nu(),
        n: order.n(),
        value: closed_form(family, order),
    })
}

/// Closed-form first and second reciprocal power sums of an auxiliary
/// zero family.
pub fn auxiliary_sums(family: AuxFamily, order: &Order) -> Result<(SumValue, SumValue)> {
    let (first, second) = match family {
        AuxFamily::Sigma => (SumFamily::Sigma1, SumFamily::Sigma2),
        AuxFamily::Rho => (SumFamily::Rho1, SumFamily::Rho2),
        AuxFamily::Kappa => (SumFamily::Kappa1, SumFamily::Kappa2),
        AuxFamily::Omega => (SumFamily::Omega1, SumFamily::Omega2),
    };
    let mk = |f: SumFamily| SumValue {
        family: f,
        nu: order.nu(),
        n: order.n(),
        value: closed_form(f, order),
    };
    Ok((mk(first), mk(second)))
}

/// Power-sum enclosure of the order-zero radius for the four targets with
/// closed-form sums. Lower and upper come from the second-order sums; the
/// starlike targets also admit a coarser first-order upper bound, reported
/// as `extra_upper`.
pub fn radius_bounds(target: BoundsTarget, order: &Order) -> Result<BoundsPair> {
    let c1v = c1(order);
    let (nu, n) = (order.nu(), order.n());
    let pair = match target {
        BoundsTarget::StarlikeG => {
            let (s1, s2) = auxiliary_sums(AuxFamily::Sigma, order)?;
            BoundsPair {
                target,
                nu,
                n,
                lower: 1.0 / s1.value.sqrt(),
                upper: (s1.value / s2.value).sqrt(),
                extra_upper: Some((1.0 / (2.0 * c1v)).sqrt()),
            }
        }
        BoundsTarget::StarlikeH => {
            let (r1, r2) = auxiliary_sums(AuxFamily::Rho, order)?;
            BoundsPair {
                target,
                nu,
                n,
                lower: 1.0 / r1.value,
                upper: r1.value / r2.value,
                extra_upper: Some(2.0 / r1.value),
            }
        }
        BoundsTarget::ConvexG => {
            let (k1, k2) = auxiliary_sums(AuxFamily::Kappa, order)?;
            BoundsPair {
                target,
                nu,
                n,
                lower: 1.0 / k1.value.sqrt(),
                upper: (k1.value / k2.value).sqrt(),
                extra_upper: None,
            }
        }
        BoundsTarget::ConvexH => {
            let (o1, o2) = auxiliary_sums(AuxFamily::Omega, order)?;
            BoundsPair {
                target,
                nu,
                n,
                lower: 1.0 / o1.value,
                upper: o1.value / o2.value,
                extra_upper: None,
            }
        }
    };
    Ok(pair)
}

/// Midpoint-corrected tail `sum_{k >= 1} 1/(x + k pi)^2` for a zero
/// sequence with asymptotic spacing `pi` past its `x`-th member.
fn tail_power2(x: f64) -> f64 {
    1.0 / (std::f64::consts::PI * (x + std::f64::consts::FRAC_PI_2))
}

/// Midpoint-corrected tail `sum_{k >= 1} 1/(x + k pi)^4`.
fn tail_power4(x: f64) -> f64 {
    let t = x + std::f64::consts::FRAC_PI_2;
    1.0 / (3.0 * std::f64::consts::PI * t * t * t)
}

/// Numeric counterpart of the closed-form sums: `sum 1/x_k^power` over the
/// first `count` zeros *in the scan variable* `x` (the square root of the
/// squared-variable zeros), plus a midpoint tail estimate for the rest.
///
/// With 200 zeros the result is reliable to a few parts in `1e7`, enough
/// to confront the closed forms at `1e-6` relative.
pub fn numeric_zero_power_sum(
    which: ZeroFamily,
    order: &Order,
    power: u32,
    count: usize,
    policy: &TruncationPolicy,
) -> Result<f64> {
    if power != 2 && power != 4 {
        return Err(crate::error::Error::Domain(format!(
            "numeric sums support powers 2 and 4, got {power}"
        )));
    }
    let seq = zeros::find_zeros(which, order, count, policy)?;
    let xs: Vec<f64> = if which.squared_variable() {
        seq.zeros.iter().map(|&z| z.sqrt()).collect()
    } else {
        seq.zeros
    };
    // Sum smallest terms first.
    let mut sum = 0.0f64;
    for &x in xs.iter().rev() {
        let x2 = x * x;
        sum += if power == 2 { 1.0 / x2 } else { 1.0 / (x2 * x2) };
    }
    let last = *xs.last().expect("count >= 1");
    sum += if power == 2 {
        tail_power2(last)
    } else {
        tail_power4(last)
    };
    Ok(sum)
}

/// Product of `(1 - Z/j_k^2)` over the first `count` zeros, times a tail
/// compensation `exp(-Z T2 - Z^2 T4 / 2)` built from the midpoint tails,
/// where `Z = z^2`. Approximates the normalized series itself; the
/// agreement on the inner half of the first zero's interval is an
/// end-to-end check that the computed zeros really are the series' roots.
pub fn truncated_product(
    order: &Order,
    z: f64,
    count: usize,
    policy: &TruncationPolicy,
) -> Result<f64> {
    let seq = zeros::find_zeros(ZeroFamily::JDeriv, order, count, policy)?;
    let last = *seq.zeros.last().expect("count >= 1");
    let zz = z * z;
    let mut product = 1.0f64;
    for &j in seq.zeros.iter() {
        product *= 1.0 - zz / (j * j);
    }
    let t2 = tail_power2(last);
    let t4 = tail_power4(last);
    Ok(product * (-zz * t2 - zz * zz * t4 * 0.5).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    const POLICY: TruncationPolicy = TruncationPolicy {
        rel_tol: 1e-15,
        abs_tol: 1e-300,
        max_terms: 500,
        consecutive_small: 3,
    };

    fn order(nu: f64, n: u32) -> Order {
        Order::new(nu, n).unwrap()
    }

    #[test]
    fn closed_form_spot_values() {
        // sum 1/j^2 at (nu, n) = (1, 0) is 1/8.
        let s = zero_power_sum(&order(1.0, 0), 2).unwrap();
        assert_eq!(s.value, 0.125);
        // At (2.5, 1): (nu+2)/(4 (q+1)(q+2)) with q = 1.5.
        let s = zero_power_sum(&order(2.5, 1), 2).unwrap();
        assert!((s.value - 4.5 / 35.0).abs() < 1e-15);
        // First convexity sums at (3.5, 0).
        let (k1, _) = auxiliary_sums(AuxFamily::Kappa, &order(3.5, 0)).unwrap();
        assert!((k1.value - 0.5).abs() < 1e-15);
        let (o1, _) = auxiliary_sums(AuxFamily::Omega, &order(3.5, 0)).unwrap();
        assert!((o1.value - 1.0 / 4.5).abs() < 1e-15);
    }

    #[test]
    fn known_bounds_for_a_strip_neighbor_pair() {
        // (nu, n) = (1.5, 2): the starlike-g bounds are sqrt(2/7) and
        // (extra) sqrt(3/7); the starlike-h bounds are 3/7 and 2940/5969.
        let o = order(1.5, 2);
        let g = radius_bounds(BoundsTarget::StarlikeG, &o).unwrap();
        assert!((g.lower - (2.0f64 / 7.0).sqrt()).abs() < 1e-15);
        assert!((g.extra_upper.unwrap() - (3.0f64 / 7.0).sqrt()).abs() < 1e-15);
        let h = radius_bounds(BoundsTarget::StarlikeH, &o).unwrap();
        assert!((h.lower - 3.0 / 7.0).abs() < 1e-15);
        assert!((h.upper - 2940.0 / 5969.0).abs() < 1e-14);
        assert!((h.extra_upper.unwrap() - 6.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn lower_bounds_match_their_algebraic_forms() {
        // The closed lower bounds, re-derived directly from (nu, n), must
        // agree with the sum-based computation to near machine precision.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let n = rng.gen_range(0..4u32);
            let nu = n as f64 - 1.0 + 0.1 + 9.0 * rng.gen::<f64>();
            let o = order(nu, n);
            let q = nu - n as f64;
            let fac = (q + 1.0) * (q + 2.0) / (nu + 2.0);

            let g = radius_bounds(BoundsTarget::StarlikeG, &o).unwrap();
            assert!((g.lower - 2.0 * (fac / 3.0).sqrt()).abs() < 1e-14 * g.lower);
            let h = radius_bounds(BoundsTarget::StarlikeH, &o).unwrap();
            assert!((h.lower - 2.0 * fac).abs() < 1e-14 * h.lower);
            let cg = radius_bounds(BoundsTarget::ConvexG, &o).unwrap();
            assert!((cg.lower - 2.0 / 3.0 * fac.sqrt()).abs() < 1e-14 * cg.lower);
            let ch = radius_bounds(BoundsTarget::ConvexH, &o).unwrap();
            assert!((ch.lower - fac).abs() < 1e-14 * ch.lower);

            // Enclosures are genuinely ordered.
            for b in [g, h, cg, ch] {
                assert!(b.lower < b.upper, "{b:?}");
                if let Some(extra) = b.extra_upper {
                    assert!(b.lower < extra, "{b:?}");
                }
            }
        }
    }

    #[test]
    fn numeric_sums_confirm_closed_forms() {
        let o = order(2.5, 1);
        let cases = [
            (ZeroFamily::JDeriv, 2, SumFamily::J2),
            (ZeroFamily::JDeriv, 4, SumFamily::J4),
            (ZeroFamily::GPrime, 2, SumFamily::Sigma1),
            (ZeroFamily::GPrime, 4, SumFamily::Sigma2),
            (ZeroFamily::HPrime, 2, SumFamily::Rho1),
            (ZeroFamily::HPrime, 4, SumFamily::Rho2),
            (ZeroFamily::Delta, 2, SumFamily::Kappa1),
            (ZeroFamily::Delta, 4, SumFamily::Kappa2),
            (ZeroFamily::Theta, 2, SumFamily::Omega1),
            (ZeroFamily::Theta, 4, SumFamily::Omega2),
        ];
        for &(which, power, family) in &cases {
            let numeric = numeric_zero_power_sum(which, &o, power, 200, &POLICY).unwrap();
            let closed = closed_form(family, &o);
            assert!(
                (numeric - closed).abs() <= 1e-6 * closed.abs(),
                "{family:?}: numeric {numeric} vs closed {closed}"
            );
        }
    }

    #[test]
    fn product_over_zeros_reconstructs_the_series() {
        use crate::params::Kind;
        let o = order(2.5, 1);
        let j1 = zeros::first_zero(ZeroFamily::JDeriv, &o, &POLICY).unwrap();
        for i in 1..=8 {
            let z = j1 * 0.5 * (i as f64 / 8.0);
            let series = crate::series::eval_normalized(Kind::G, &o, z, &POLICY).unwrap() / z;
            let product = truncated_product(&o, z, 200, &POLICY).unwrap();
            assert!(
                (series - product).abs() <= 1e-6 * series.abs(),
                "z = {z}: {series} vs {product}"
            );
        }
    }
}
