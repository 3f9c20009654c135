// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Radii of starlikeness and convexity of order `beta`.
//!
//! For each normalization the radius is the unique root of a strictly
//! monotone quotient equation on a bracket whose right end is the first
//! pole of the quotient (itself the first zero of a weighted section, see
//! [`crate::zeros`]):
//!
//! | kind | starlikeness: root of            | convexity: root of                  |
//! |------|----------------------------------|-------------------------------------|
//! | `f`  | `r f'/f = beta` (see below)      | `1 + r f''/f' = beta`               |
//! | `g`  | `r g'/g = beta`                  | `1 + r g''/g' = beta`               |
//! | `h`  | `Z h'/h = beta` (variable `Z`)   | `1 + Z h''/h' = beta` (variable `Z`)|
//!
//! The power normalization `f` exists in two regimes: for `nu > n` the
//! quotient is a ratio of alternating sections (principal branch); on the
//! strip `n - 1 < nu < n` the same equation transforms into a root of an
//! all-positive-series quotient (modified branch), solved as
//! `Q(r) = beta (nu - n)` with `Q` strictly increasing. Convexity of `f`
//! is only defined for `nu > n`.
//!
//! Every returned radius carries the final sign-certified bracket and the
//! absolute residual of the quotient equation at the reported root.

use crate::error::{Error, Result};
use crate::params::{Kind, Order, Params, Property, TruncationPolicy};
use crate::series::{self, Weights};
use crate::tolerances;
use crate::zeros::{self, ZeroFamily};

/// Which solution regime produced a radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Alternating-series quotient on `(0, first pole)`; `nu > n` for
    /// kind `f`, any admissible order for `g` and `h`.
    Principal,
    /// All-positive-series quotient used for kind `f` on the strip
    /// `n - 1 < nu < n`.
    Modified,
}

/// A computed radius with its certification data.
#[derive(Debug, Clone)]
pub struct RadiusResult {
    pub kind: Kind,
    pub property: Property,
    pub nu: f64,
    pub n: u32,
    pub beta: f64,
    /// The radius, in the normalization's own variable (`z` for `f` and
    /// `g`, the squared variable `Z` for `h`).
    pub radius: f64,
    /// Final sign-certified enclosure of the radius.
    pub bracket: (f64, f64),
    /// Absolute value of the quotient equation at the reported radius.
    pub residual: f64,
    pub branch: Branch,
}

/// `(value, slope)` of `A_wn / A_wd` at `x`, where the slope is taken in
/// the variable the sections live on (`x` itself, or `Z` when `big`).
fn ratio_with_slope(
    nu: f64,
    n: u32,
    wn: Weights,
    wd: Weights,
    big: bool,
    x: f64,
    policy: &TruncationPolicy,
) -> Result<(f64, f64)> {
    let weights = [wn, wd, wn.times_m(), wd.times_m()];
    let s = if big {
        series::sections_big(nu, n, &weights, x, policy)?
    } else {
        series::sections_z(nu, n, &weights, x, policy)?
    };
    let d = s.denominator(1, x)?;
    let value = s.values[0] / d;
    let chain = if big { 1.0 / x } else { 2.0 / x };
    let slope = chain * (s.values[2] * d - s.values[0] * s.values[3]) / (d * d);
    Ok((value, slope))
}

/// `(value, slope)` of the convexity quotient of kind `f` at `x`
/// (`nu > n` required by the caller).
fn convex_f_with_slope(
    nu: f64,
    n: u32,
    x: f64,
    policy: &TruncationPolicy,
) -> Result<(f64, f64)> {
    let q = nu - n as f64;
    let w_n1 = Weights::new([q, 2.0, 0.0, 0.0]);
    let w_n2 = Weights::new([q * (q - 1.0), 2.0 * (2.0 * q - 1.0), 4.0, 0.0]);
    let weights = [
        w_n1,
        Weights::ONE,
        w_n2,
        w_n1.times_m(),
        Weights::ONE.times_m(),
        w_n2.times_m(),
    ];
    let s = series::sections_z(nu, n, &weights, x, policy)?;
    let d1 = s.denominator(1, x)?;
    let n1 = s.denominator(0, x)?;
    let r1 = s.values[0] / d1;
    let r2 = s.values[2] / n1;
    let r1_slope = (2.0 / x) * (s.values[3] * d1 - s.values[0] * s.values[4]) / (d1 * d1);
    let r2_slope = (2.0 / x) * (s.values[5] * n1 - s.values[2] * s.values[3]) / (n1 * n1);
    let c = 1.0 / q - 1.0;
    Ok((1.0 + c * r1 + r2, c * r1_slope + r2_slope))
}

/// Bracketed bisection to [`tolerances::REFINE_TOL`] relative width, then
/// two guarded Newton steps; returns `(root, bracket, |value at root|)`.
fn bracketed_root(
    f: &dyn Fn(f64) -> Result<(f64, f64)>,
    mut a: f64,
    mut b: f64,
) -> Result<(f64, (f64, f64), f64)> {
    let (mut fa, _) = f(a)?;
    let (fb, _) = f(b)?;
    if fa == 0.0 {
        return Ok((a, (a, a), 0.0));
    }
    if fb == 0.0 {
        return Ok((b, (b, b), 0.0));
    }
    if (fa > 0.0) == (fb > 0.0) {
        return Err(Error::BracketFailure { lo: a, hi: b });
    }
    while b - a > tolerances::REFINE_TOL * b.max(1.0) {
        let mid = 0.5 * (a + b);
        let (fm, _) = f(mid)?;
        if fm == 0.0 {
            return Ok((mid, (a, b), 0.0));
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let mut x = 0.5 * (a + b);
    let (mut fx, mut dfx) = f(x)?;
    for _ in 0..2 {
        if dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        if !(next > a && next < b) {
            break;
        }
        let (fnext, dfnext) = f(next)?;
        if fnext.abs() >= fx.abs() {
            break;
        }
        if (fnext > 0.0) == (fa > 0.0) {
            a = next;
        } else {
            b = next;
        }
        x = next;
        fx = fnext;
        dfx = dfnext;
    }
    if dfx != 0.0 && (fx / dfx).abs() > tolerances::RADIUS_RESIDUAL * x.max(1.0) {
        return Err(Error::IllConditioned(format!(
            "radius near {x} failed its residual certificate: step = {}",
            (fx / dfx).abs()
        )));
    }
    Ok((x, (a, b), fx.abs()))
}

/// Right end of the principal bracket: the first pole of the quotient,
/// pulled inward so the endpoint is still on the monotone side.
fn principal_hi(pole: f64) -> f64 {
    pole * (1.0 - tolerances::BRACKET_SHRINK)
}

/// Lower end of the principal bracket: close enough to the origin that
/// the quotient is near 1 for every admissible `beta < 1`.
fn principal_lo(pole: f64) -> f64 {
    pole * 1e-8
}

fn solve_principal(
    f: &dyn Fn(f64) -> Result<(f64, f64)>,
    pole: f64,
) -> Result<(f64, (f64, f64), f64)> {
    bracketed_root(f, principal_lo(pole), principal_hi(pole))
}

/// Radius of starlikeness of order `beta`, in the normalization's own
/// variable.
///
/// # Errors
///
/// [`Error::Domain`] for kind `f` when `nu == n` (the power normalization
/// degenerates); other error variants report numerical certification
/// failures and should not occur for admissible parameters.
pub fn starlike_radius(
    kind: Kind,
    params: &Params,
    policy: &TruncationPolicy,
) -> Result<RadiusResult> {
    let order = &params.order;
    let (nu, n) = (order.nu(), order.n());
    let beta = params.beta;
    let q = order.nu_minus_n();
    let make = |radius: f64, bracket: (f64, f64), residual: f64, branch: Branch| RadiusResult {
        kind,
        property: Property::Starlike,
        nu,
        n,
        beta,
        radius,
        bracket,
        residual,
        branch,
    };
    match kind {
        Kind::F if q == 0.0 => Err(Error::Domain(
            "kind f needs nu != n; the power normalization degenerates at nu = n".to_string(),
        )),
        Kind::F if q < 0.0 => {
            // Modified branch: Q(r) strictly increases from q < 0; the
            // radius solves Q(r) = beta q, and beta q > q for beta < 1.
            let target = beta * q;
            let eval = move |r: f64| -> Result<(f64, f64)> {
                let w = Weights::new([q, 2.0, 0.0, 0.0]);
                let (v, s) = modified_ratio_with_slope(nu, n, w, r, policy)?;
                Ok((v - target, s))
            };
            let lo = 1e-9;
            let mut hi = 1.0;
            loop {
                let (v, _) = eval(hi)?;
                if v > 0.0 {
                    break;
                }
                hi *= 2.0;
                if hi > 1e4 {
                    return Err(Error::BracketFailure { lo, hi });
                }
            }
            let (root, bracket, residual) = bracketed_root(&eval, lo, hi)?;
            Ok(make(root, bracket, residual, Branch::Modified))
        }
        Kind::F => {
            let pole = zeros::first_zero(ZeroFamily::JDeriv, order, policy)?;
            let wn = Weights::new([q, 2.0, 0.0, 0.0]);
            let eval = move |r: f64| -> Result<(f64, f64)> {
                let (v, s) = ratio_with_slope(nu, n, wn, Weights::ONE, false, r, policy)?;
                Ok((v / q - beta, s / q))
            };
            let (root, bracket, residual) = solve_principal(&eval, pole)?;
            Ok(make(root, bracket, residual, Branch::Principal))
        }
        Kind::G => {
            let pole = zeros::first_zero(ZeroFamily::JDeriv, order, policy)?;
            let wn = Weights::new([1.0, 2.0, 0.0, 0.0]);
            let eval = move |r: f64| -> Result<(f64, f64)> {
                let (v, s) = ratio_with_slope(nu, n, wn, Weights::ONE, false, r, policy)?;
                Ok((v - beta, s))
            };
            let (root, bracket, residual) = solve_principal(&eval, pole)?;
            Ok(make(root, bracket, residual, Branch::Principal))
        }
        Kind::H => {
            let j1 = zeros::first_zero(ZeroFamily::JDeriv, order, policy)?;
            let pole = j1 * j1;
            let wn = Weights::new([1.0, 1.0, 0.0, 0.0]);
            let eval = move |big: f64| -> Result<(f64, f64)> {
                let (v, s) = ratio_with_slope(nu, n, wn, Weights::ONE, true, big, policy)?;
                Ok((v - beta, s))
            };
            let (root, bracket, residual) = solve_principal(&eval, pole)?;
            Ok(make(root, bracket, residual, Branch::Principal))
        }
    }
}

/// `(value, slope)` of the all-positive-series quotient for the modified
/// branch.
fn modified_ratio_with_slope(
    nu: f64,
    n: u32,
    wn: Weights,
    r: f64,
    policy: &TruncationPolicy,
) -> Result<(f64, f64)> {
    let weights = [wn, Weights::ONE, wn.times_m(), Weights::ONE.times_m()];
    let s = series::sections_positive(nu, n, &weights, r, policy)?;
    // The all-positive denominator is at least 1; no pole guard needed.
    let d = s.values[1];
    let value = s.values[0] / d;
    let slope = (2.0 / r) * (s.values[2] * d - s.values[0] * s.values[3]) / (d * d);
    Ok((value, slope))
}

/// Radius of convexity of order `beta`, in the normalization's own
/// variable.
///
/// # Errors
///
/// [`Error::Domain`] for kind `f` unless `nu > n` (the convexity quotient
/// involves the next derivative order); other error variants report
/// numerical certification failures.
pub fn convex_radius(
    kind: Kind,
    params: &Params,
    policy: &TruncationPolicy,
) -> Result<RadiusResult> {
    let order = &params.order;
    let (nu, n) = (order.nu(), order.n());
    let beta = params.beta;
    let make = |radius: f64, bracket: (f64, f64), residual: f64| RadiusResult {
        kind,
        property: Property::Convex,
        nu,
        n,
        beta,
        radius,
        bracket,
        residual,
        branch: Branch::Principal,
    };
    match kind {
        Kind::F => {
            let q = order.nu_minus_n();
            if q <= 0.0 {
                return Err(Error::Domain(format!(
                    "convexity of kind f needs nu > n, got nu = {nu}, n = {n}"
                )));
            }
            let pole = zeros::first_zero(ZeroFamily::JDeriv, &Order::new(nu, n + 1)?, policy)?;
            let eval = move |r: f64| -> Result<(f64, f64)> {
                let (v, s) = convex_f_with_slope(nu, n, r, policy)?;
                Ok((v - beta, s))
            };
            let (root, bracket, residual) = solve_principal(&eval, pole)?;
            Ok(make(root, bracket, residual))
        }
        Kind::G => {
            let pole = zeros::first_zero(ZeroFamily::GPrime, order, policy)?;
            let wn = Weights::new([1.0, 4.0, 4.0, 0.0]);
            let wd = Weights::new([1.0, 2.0, 0.0, 0.0]);
            let eval = move |r: f64| -> Result<(f64, f64)> {
                let (v, s) = ratio_with_slope(nu, n, wn, wd, false, r, policy)?;
                Ok((v - beta, s))
            };
            let (root, bracket, residual) = solve_principal(&eval, pole)?;
            Ok(make(root, bracket, residual))
        }
        Kind::H => {
            let pole = zeros::first_zero(ZeroFamily::HPrime, order, policy)?;
            let wn = Weights::new([1.0, 2.0, 1.0, 0.0]);
            let wd = Weights::new([1.0, 1.0, 0.0, 0.0]);
            let eval = move |big: f64| -> Result<(f64, f64)> {
                let (v, s) = ratio_with_slope(nu, n, wn, wd, true, big, policy)?;
                Ok((v - beta, s))
            };
            let (root, bracket, residual) = solve_principal(&eval, pole)?;
            Ok(make(root, bracket, residual))
        }
    }
}
