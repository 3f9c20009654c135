// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Power-series core: the normalized derivative series, its polynomially
//! weighted sections, and the quotients whose roots define the radii.
//!
//! # The one series under everything
//!
//! For parameters `(nu, n)` let `c_0 = 1` and
//!
//! ```text
//! c_{m+1}/c_m = (2m+nu+1)(2m+nu+2) /
//!               ((m+1)(2m+nu-n+1)(2m+nu-n+2)(m+nu+1)).
//! ```
//!
//! Every function this crate evaluates is a *weighted section*
//!
//! ```text
//! A_w(u) = sum_m (+-1)^m w(m) c_m u^m,
//! ```
//!
//! where `u = z^2/4` (or `u = Z/4` in the squared-argument variable) and
//! `w(m)` is a polynomial of degree at most three:
//!
//! | function                                    | weight `w(m)`   |
//! |---------------------------------------------|-----------------|
//! | normalized derivative series                | `1`             |
//! | numerator of the starlike quotient (`g`)    | `2m + 1`        |
//! | numerator of the starlike quotient (`h`)    | `m + 1`         |
//! | `z J^(n+1) / J^(n)` numerator               | `2m + nu - n`   |
//! | convexity numerator for `g`                 | `(2m + 1)^2`    |
//! | convexity numerator for `h`                 | `(m + 1)^2`     |
//! | derivative of a section with weight `w`     | `m * w(m)`      |
//!
//! Sections are summed in double-double precision below
//! [`tolerances::Z_SPLIT`] and reduced to Bessel-derivative combinations
//! (see [`crate::asymptotic`]) above it; either way all sections requested
//! in one call share a single positive scaling, so quotients and Newton
//! corrections are scale-free.

use crate::asymptotic;
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::gamma;
use crate::params::{Kind, Order, TruncationPolicy};
use crate::tolerances;

/// Weight polynomial `w(m) = c[0] + c[1] m + c[2] m^2 + c[3] m^3` applied
/// to the series terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Weights([f64; 4]);

impl Weights {
    /// The unit weight: the plain normalized series.
    pub const ONE: Weights = Weights([1.0, 0.0, 0.0, 0.0]);

    pub const fn new(c: [f64; 4]) -> Self {
        Weights(c)
    }

    /// Coefficient of `m^j`.
    #[inline]
    pub fn coeff(&self, j: usize) -> f64 {
        self.0[j]
    }

    /// `w(m)` by Horner evaluation.
    #[inline]
    pub fn eval(&self, m: usize) -> f64 {
        let x = m as f64;
        ((self.0[3] * x + self.0[2]) * x + self.0[1]) * x + self.0[0]
    }

    /// The weight `m * w(m)` of the derivative section.
    ///
    /// Requires the cubic coefficient to be zero (all differentiated
    /// weights in this crate are at most quadratic).
    pub fn times_m(&self) -> Weights {
        debug_assert_eq!(self.0[3], 0.0, "cannot raise degree past cubic");
        Weights([0.0, self.0[0], self.0[1], self.0[2]])
    }
}

/// Sign pattern of a section: alternating (the Bessel direction) or all
/// positive (the modified direction used on the strip `n-1 < nu < n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SeriesSign {
    Alternating,
    Positive,
}

/// Values of several weighted sections at one point, under one common
/// positive scaling, each with an absolute noise-floor estimate.
#[derive(Debug, Clone)]
pub(crate) struct SectionValues {
    pub values: Vec<f64>,
    pub noise: Vec<f64>,
}

impl SectionValues {
    /// Value `i`, erroring with [`Error::PoleProximity`] when it is below
    /// its own noise floor (the caller is about to divide by it).
    pub fn denominator(&self, i: usize, at: f64) -> Result<f64> {
        let v = self.values[i];
        if v.abs() <= self.noise[i] {
            return Err(Error::PoleProximity {
                at,
                denom: v.abs(),
            });
        }
        Ok(v)
    }
}

/// Double-double evaluation of all requested sections in one pass over the
/// term recurrence.
fn eval_sections_dd(
    nu: f64,
    n: u32,
    u: Dd,
    sign: SeriesSign,
    weights: &[Weights],
    policy: &TruncationPolicy,
    at_for_errors: f64,
) -> Result<SectionValues> {
    let k = weights.len();
    let mut term = Dd::ONE; // unweighted |c_m u^m| carrier (m = 0)
    let mut flip = 1.0f64;
    let mut accs: Vec<Dd> = weights.iter().map(|w| Dd::from_f64(w.eval(0))).collect();
    let mut max_term: Vec<f64> = weights.iter().map(|w| w.eval(0).abs()).collect();
    let mut consecutive = 0usize;
    let mut converged = false;
    let nf = n as f64;

    for m in 1..=policy.max_terms {
        let mf = m as f64;
        // All factors are exact double-double sums/products, so the
        // recurrence itself adds no rounding beyond the ~1e-31 working
        // precision even for non-representable `nu` combinations.
        let f1 = Dd::from_sum(2.0 * mf - 1.0, nu);
        let f2 = Dd::from_sum(2.0 * mf, nu);
        let g1 = Dd::from_sum(2.0 * mf - 1.0 - nf, nu);
        let g2 = Dd::from_sum(2.0 * mf - nf, nu);
        let g3 = Dd::from_sum(mf, nu);
        term = term
            .mul(u)
            .mul(f1)
            .mul(f2)
            .div(g1.mul_f64(mf))
            .div(g2.mul(g3));
        if !term.hi.is_finite() {
            return Err(Error::NonConvergence {
                max_terms: m,
                argument: at_for_errors,
                last_term: term.hi,
            });
        }
        if sign == SeriesSign::Alternating {
            flip = -flip;
        }
        let signed = term.mul_f64(flip);

        let mut all_small = true;
        for i in 0..k {
            let wm = weights[i].eval(m);
            let contribution = signed.mul_f64(wm);
            accs[i] = accs[i].add(contribution);
            let mag = contribution.abs_hi();
            if mag > max_term[i] {
                max_term[i] = mag;
            }
            let floor =
                policy.rel_tol * accs[i].abs_hi() + tolerances::SERIES_NOISE * max_term[i]
                    + policy.abs_tol;
            if mag > floor {
                all_small = false;
            }
        }
        if all_small {
            consecutive += 1;
            if consecutive >= policy.consecutive_small {
                converged = true;
                break;
            }
        } else {
            consecutive = 0;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            max_terms: policy.max_terms,
            argument: at_for_errors,
            last_term: term.hi,
        });
    }
    Ok(SectionValues {
        values: accs.iter().map(|a| a.to_f64()).collect(),
        noise: max_term
            .iter()
            .map(|&t| tolerances::SERIES_NOISE * t + policy.abs_tol)
            .collect(),
    })
}

/// Large-argument evaluation of the sections: each is reduced to a
/// Bessel-derivative combination and multiplied by the common prefactor
/// `PRE(x) = 2^nu Gamma(nu-n+1) x^(n-nu)`, so the values continue the
/// series branch smoothly across [`tolerances::Z_SPLIT`].
fn eval_sections_asymptotic(nu: f64, n: u32, x: f64, weights: &[Weights]) -> SectionValues {
    debug_assert!(
        nu - n as f64 + 1.0 > 0.0,
        "large-argument sections need nu > n - 1"
    );
    let pre = (nu * std::f64::consts::LN_2
        + gamma::ln_gamma(nu - n as f64 + 1.0)
        + (n as f64 - nu) * x.ln())
    .exp();
    let mut values = Vec::with_capacity(weights.len());
    let mut noise = Vec::with_capacity(weights.len());
    // Relative accuracy scale of the trigonometric backend.
    const ASYMPTOTIC_EPS: f64 = 1e-13;
    for w in weights {
        let alpha = asymptotic::weight_combo(nu, n, w);
        values.push(pre * asymptotic::combo_value(nu, n, &alpha, x));
        noise.push(pre * ASYMPTOTIC_EPS * asymptotic::combo_scale(&alpha, x));
    }
    SectionValues { values, noise }
}

/// Sections at a point of the `z`-variable (argument of the derivative
/// itself); dispatches on [`tolerances::Z_SPLIT`].
pub(crate) fn sections_z(
    nu: f64,
    n: u32,
    weights: &[Weights],
    z: f64,
    policy: &TruncationPolicy,
) -> Result<SectionValues> {
    if !(z >= 0.0) {
        return Err(Error::Domain(format!("argument must be >= 0, got {z}")));
    }
    if z <= tolerances::Z_SPLIT {
        let u = Dd::from_prod(z, z).mul_f64(0.25);
        eval_sections_dd(nu, n, u, SeriesSign::Alternating, weights, policy, z)
    } else {
        Ok(eval_sections_asymptotic(nu, n, x_checked(z)?, weights))
    }
}

/// Sections at a point of the squared variable `Z = z^2` (the variable of
/// the `h` normalization); `u = Z/4` is formed exactly.
pub(crate) fn sections_big(
    nu: f64,
    n: u32,
    weights: &[Weights],
    big_z: f64,
    policy: &TruncationPolicy,
) -> Result<SectionValues> {
    if !(big_z >= 0.0) {
        return Err(Error::Domain(format!(
            "squared-variable argument must be >= 0, got {big_z}"
        )));
    }
    let x = big_z.sqrt();
    if x <= tolerances::Z_SPLIT {
        let u = Dd::from_f64(big_z).mul_f64(0.25);
        eval_sections_dd(nu, n, u, SeriesSign::Alternating, weights, policy, big_z)
    } else {
        Ok(eval_sections_asymptotic(nu, n, x_checked(x)?, weights))
    }
}

/// Sections of the all-positive (modified-direction) series at `u = r^2/4`.
/// Never needs the large-argument backend: there is no cancellation.
pub(crate) fn sections_positive(
    nu: f64,
    n: u32,
    weights: &[Weights],
    r: f64,
    policy: &TruncationPolicy,
) -> Result<SectionValues> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("argument must be >= 0, got {r}")));
    }
    let u = Dd::from_prod(r, r).mul_f64(0.25);
    eval_sections_dd(nu, n, u, SeriesSign::Positive, weights, policy, r)
}

fn x_checked(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Domain(format!("argument must be finite, got {x}")))
    }
}

/// Rejects parameter pairs whose series coefficients hit a pole of the
/// Gamma ratio: `nu - n` must not be a negative integer, and `nu > -1`.
fn check_raw_order(nu: f64, n: u32) -> Result<()> {
    if !nu.is_finite() {
        return Err(Error::Domain(format!("nu must be finite, got {nu}")));
    }
    if nu <= -1.0 {
        return Err(Error::Domain(format!("require nu > -1, got {nu}")));
    }
    let d = nu - n as f64;
    if d <= -1.0 && d.fract() == 0.0 {
        return Err(Error::Domain(format!(
            "nu - n must not be a negative integer, got nu = {nu}, n = {n}"
        )));
    }
    Ok(())
}

/// `n`th derivative of the Bessel function `J_nu` at `z > 0`.
///
/// Valid for any finite `nu > -1` with `nu - n` not a negative integer
/// (the series normalization degenerates there); no `nu > n - 1`
/// restriction is needed for plain evaluation.
///
/// # Errors
///
/// [`Error::Domain`] on invalid `(nu, n, z)`; [`Error::NonConvergence`] if
/// the truncation policy is exhausted.
pub fn eval_bessel_deriv(nu: f64, n: u32, z: f64, policy: &TruncationPolicy) -> Result<f64> {
    check_raw_order(nu, n)?;
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("require z > 0, got {z}")));
    }
    if z > tolerances::Z_SPLIT {
        return Ok(asymptotic::bessel_j_deriv(nu, n, z));
    }
    let sections = sections_z(nu, n, &[Weights::ONE], z, policy)?;
    // J^(n)(z) = A_1(z^2/4) * z^(nu-n) * FF / (2^nu Gamma(nu+1)), where
    // FF = nu (nu-1) ... (nu-n+1) carries the sign of 1/Gamma(nu-n+1).
    let mut ff = 1.0f64;
    for i in 0..n {
        ff *= nu - i as f64;
    }
    let scale = ((nu - n as f64) * z.ln() - nu * std::f64::consts::LN_2 - gamma::ln_gamma(nu + 1.0))
        .exp();
    Ok(sections.values[0] * ff * scale)
}

/// Value of the chosen normalization at a point of its own variable
/// (`z` for `f` and `g`; the squared variable `Z` for `h`).
///
/// # Errors
///
/// [`Error::Domain`] when the point is outside the function's domain (for
/// the power normalization `f` this means past the first zero of the
/// series, where the real power is undefined), or `nu = n` for kind `f`.
pub fn eval_normalized(kind: Kind, order: &Order, at: f64, policy: &TruncationPolicy) -> Result<f64> {
    let (nu, n) = (order.nu(), order.n());
    if !(at > 0.0) || !at.is_finite() {
        return Err(Error::Domain(format!("require a positive point, got {at}")));
    }
    match kind {
        Kind::G => {
            let s = sections_z(nu, n, &[Weights::ONE], at, policy)?;
            Ok(at * s.values[0])
        }
        Kind::H => {
            let s = sections_big(nu, n, &[Weights::ONE], at, policy)?;
            Ok(at * s.values[0])
        }
        Kind::F => {
            let q = order.nu_minus_n();
            if q == 0.0 {
                return Err(Error::Domain(
                    "power normalization needs nu != n".to_string(),
                ));
            }
            let s = sections_z(nu, n, &[Weights::ONE], at, policy)?;
            let a1 = s.values[0];
            if a1 <= s.noise[0] {
                return Err(Error::Domain(format!(
                    "point {at} is at or past the first series zero; \
                     the real power normalization is undefined there"
                )));
            }
            Ok(at * a1.powf(1.0 / q))
        }
    }
}

/// Starlike quotient `(z F'(z)) / F(z)` of the chosen normalization, in the
/// normalization's own variable. Tends to `1` at the origin and decreases
/// to `-infinity` at the first zero of the denominator.
///
/// For kind `f` this is the principal-branch object and needs `nu > n`;
/// on the strip `n - 1 < nu < n` use [`eval_modified_quotient`].
///
/// # Errors
///
/// [`Error::PoleProximity`] at (numerical) zeros of the denominator;
/// [`Error::Domain`] for kind `f` with `nu <= n`.
pub fn eval_star_quotient(
    kind: Kind,
    order: &Order,
    at: f64,
    policy: &TruncationPolicy,
) -> Result<f64> {
    let (nu, n) = (order.nu(), order.n());
    if !(at > 0.0) || !at.is_finite() {
        return Err(Error::Domain(format!("require a positive point, got {at}")));
    }
    match kind {
        Kind::F => {
            let q = order.nu_minus_n();
            if q <= 0.0 {
                return Err(Error::Domain(format!(
                    "principal starlike quotient of kind f needs nu > n \
                     (got nu = {nu}, n = {n}); the strip n-1 < nu < n is \
                     served by the modified quotient"
                )));
            }
            let w_num = Weights::new([q, 2.0, 0.0, 0.0]);
            let s = sections_z(nu, n, &[w_num, Weights::ONE], at, policy)?;
            let den = s.denominator(1, at)?;
            Ok(s.values[0] / den / q)
        }
        Kind::G => {
            let w_num = Weights::new([1.0, 2.0, 0.0, 0.0]);
            let s = sections_z(nu, n, &[w_num, Weights::ONE], at, policy)?;
            let den = s.denominator(1, at)?;
            Ok(s.values[0] / den)
        }
        Kind::H => {
            let w_num = Weights::new([1.0, 1.0, 0.0, 0.0]);
            let s = sections_big(nu, n, &[w_num, Weights::ONE], at, policy)?;
            let den = s.denominator(1, at)?;
            Ok(s.values[0] / den)
        }
    }
}

/// Convexity quotient `1 + (x F''(x)) / F'(x)` of the chosen normalization,
/// in its own variable. Tends to `1` at the origin and decreases to
/// `-infinity` at the first zero of `F'`.
///
/// Kind `f` needs `nu > n` (the quotient involves the next derivative
/// order, which only stays in the admissible range then).
///
/// # Errors
///
/// [`Error::PoleProximity`] at (numerical) zeros of `F'`;
/// [`Error::Domain`] for kind `f` with `nu <= n`.
pub fn eval_convex_quotient(
    kind: Kind,
    order: &Order,
    at: f64,
    policy: &TruncationPolicy,
) -> Result<f64> {
    let (nu, n) = (order.nu(), order.n());
    if !(at > 0.0) || !at.is_finite() {
        return Err(Error::Domain(format!("require a positive point, got {at}")));
    }
    match kind {
        Kind::F => {
            let q = order.nu_minus_n();
            if q <= 0.0 {
                return Err(Error::Domain(format!(
                    "convexity quotient of kind f needs nu > n (got nu = {nu}, n = {n})"
                )));
            }
            // 1 + (1/q - 1) N1/D1 + N2/N1 with
            //   D1 = A_1, N1 = A_{2m+q}, N2 = A_{(2m+q)(2m+q-1)}.
            let w_n1 = Weights::new([q, 2.0, 0.0, 0.0]);
            let w_n2 = Weights::new([q * (q - 1.0), 2.0 * (2.0 * q - 1.0), 4.0, 0.0]);
            let s = sections_z(nu, n, &[w_n1, w_n2, Weights::ONE], at, policy)?;
            let d1 = s.denominator(2, at)?;
            let n1 = s.denominator(0, at)?;
            Ok(1.0 + (1.0 / q - 1.0) * (s.values[0] / d1) + s.values[1] / n1)
        }
        Kind::G => {
            let w_num = Weights::new([1.0, 4.0, 4.0, 0.0]);
            let w_den = Weights::new([1.0, 2.0, 0.0, 0.0]);
            let s = sections_z(nu, n, &[w_num, w_den], at, policy)?;
            let den = s.denominator(1, at)?;
            Ok(s.values[0] / den)
        }
        Kind::H => {
            let w_num = Weights::new([1.0, 2.0, 1.0, 0.0]);
            let w_den = Weights::new([1.0, 1.0, 0.0, 0.0]);
            let s = sections_big(nu, n, &[w_num, w_den], at, policy)?;
            let den = s.denominator(1, at)?;
            Ok(s.values[0] / den)
        }
    }
}

/// Modified-direction quotient used for the power normalization on the
/// strip `n - 1 < nu < n`: the all-positive-series analogue of
/// `z J^(n+1) / J^(n)`.
///
/// Strictly increasing in `r` from its limit `nu - n` at the origin; the
/// starlike radius on the strip is the root of
/// `eval_modified_quotient(r) = beta (nu - n)`.
pub fn eval_modified_quotient(order: &Order, r: f64, policy: &TruncationPolicy) -> Result<f64> {
    let (nu, n) = (order.nu(), order.n());
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("require r >= 0, got {r}")));
    }
    let q = order.nu_minus_n();
    let w_num = Weights::new([q, 2.0, 0.0, 0.0]);
    let s = sections_positive(nu, n, &[w_num, Weights::ONE], r, policy)?;
    // The denominator series has all-positive terms and value >= 1.
    Ok(s.values[0] / s.values[1])
}
