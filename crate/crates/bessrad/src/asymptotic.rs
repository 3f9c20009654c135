// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Large-argument backend: Hankel-type trigonometric expansions of
//! `J_mu(x)` and the reduction of weighted series sections to combinations
//! of successive derivatives.
//!
//! For `x` above [`crate::tolerances::Z_SPLIT`] the power series (even in
//! extended precision) loses accuracy to cancellation, while the classical
//! expansion
//!
//! ```text
//! J_mu(x) = sqrt(2/(pi x)) * (P(mu,x) cos w - Q(mu,x) sin w),
//! w = x - (mu/2 + 1/4) pi
//! ```
//!
//! is already at full `f64` accuracy. For half-integer `mu` the `P`/`Q`
//! sums terminate and the expansion is exact for every `x > 0`; for general
//! `mu` it is truncated at its smallest term (standard optimal truncation),
//! giving ~`1e-13` relative accuracy for `x > 40` and `|mu| <= 12`.
//!
//! Higher derivatives come from the exact identity
//!
//! ```text
//! d^k/dx^k J_nu(x) = 2^{-k} * sum_i (-1)^i C(k,i) J_{nu-k+2i}(x),
//! ```
//!
//! and polynomially-weighted series sections reduce to the derivative
//! ladder through the Euler-operator recursion implemented in
//! [`weight_combo`].

use crate::series::Weights;

/// Hard cap on expansion terms for non-terminating (non-half-integer)
/// orders; the optimal-truncation rule below always stops earlier for the
/// arguments this backend accepts.
const MAX_EXPANSION_TERMS: usize = 60;

/// `J_mu(x)` by the trigonometric expansion; intended for `x >=`
/// [`crate::tolerances::Z_SPLIT`] (any real `mu` of moderate size).
pub(crate) fn bessel_j(mu: f64, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mu2 = 4.0 * mu * mu;
    // Running term u_k = a_k(mu) / x^k.
    let mut term = 1.0f64;
    let mut p = 1.0f64; // k = 0 contribution
    let mut q = 0.0f64;
    let mut prev_mag = f64::INFINITY;
    for k in 1..=MAX_EXPANSION_TERMS {
        let odd = (2 * k - 1) as f64;
        term *= (mu2 - odd * odd) / (8.0 * k as f64 * x);
        if term == 0.0 {
            break; // terminating half-integer case
        }
        if term.abs() >= prev_mag {
            break; // divergent tail reached: optimal truncation
        }
        prev_mag = term.abs();
        // P collects even k with sign (-1)^(k/2), Q odd k with (-1)^((k-1)/2).
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => unreachable!(),
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let omega = x - (0.5 * mu + 0.25) * std::f64::consts::PI;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * omega.cos() - q * omega.sin())
}

/// `k`th derivative of `J_nu` at `x`, by the binomial ladder over
/// [`bessel_j`]; intended for `x >=` [`crate::tolerances::Z_SPLIT`].
pub(crate) fn bessel_j_deriv(nu: f64, k: u32, x: f64) -> f64 {
    let mut binom = 1.0f64; // C(k, i)
    let mut acc = 0.0f64;
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * bessel_j(nu - k as f64 + 2.0 * i as f64, x);
        binom = binom * (k - i) as f64 / (i + 1) as f64;
    }
    acc * 0.5f64.powi(k as i32)
}

/// Reduces the weighted series section with weight polynomial `w(m)` to a
/// derivative combination: returns `alpha` such that
///
/// ```text
/// sum_m (-1)^m w(m) c_m (z^2/4)^m  =  PRE(z) * sum_k alpha_k z^k J^(n+k)(z)
/// ```
///
/// with `PRE(z) = 2^nu Gamma(nu-n+1) z^(n-nu) > 0`. Derivation: the Euler
/// operator `theta = z d/dz` multiplies the `m`th series term by `2m`, and
/// on the product form `PRE^{-1}(z) J^(n)(z)` it acts coefficient-wise by
/// `alpha_k -> alpha_k (n - nu + k) + alpha_{k-1}`; a weight polynomial
/// `w(m) = sum_j w_j m^j` is therefore `sum_j (w_j / 2^j) theta^j`.
pub(crate) fn weight_combo(nu: f64, n: u32, w: &Weights) -> [f64; 4] {
    let mut combo = [0.0f64; 4];
    // alpha for theta^0 applied to the bare function.
    let mut alpha = [1.0, 0.0, 0.0, 0.0];
    let mut scale = 1.0; // 1 / 2^j
    for j in 0..4 {
        let wj = w.coeff(j);
        if wj != 0.0 {
            for k in 0..4 {
                combo[k] += wj * scale * alpha[k];
            }
        }
        if j < 3 {
            alpha = theta_apply(&alpha, nu, n);
            scale *= 0.5;
        }
    }
    combo
}

/// One application of the Euler operator to a derivative combination.
fn theta_apply(alpha: &[f64; 4], nu: f64, n: u32) -> [f64; 4] {
    let base = n as f64 - nu;
    let mut out = [0.0f64; 4];
    for k in 0..4 {
        out[k] = alpha[k] * (base + k as f64);
        if k > 0 {
            out[k] += alpha[k - 1];
        }
    }
    out
}

/// Evaluates the prefactor-free combination `sum_k alpha_k z^k J^(n+k)(z)`;
/// proportional to the weighted series value with the positive factor
/// `PRE(z)` divided out.
pub(crate) fn combo_value(nu: f64, n: u32, alpha: &[f64; 4], z: f64) -> f64 {
    let mut acc = 0.0f64;
    let mut zk = 1.0f64;
    for (k, &a) in alpha.iter().enumerate() {
        if a != 0.0 {
            acc += a * zk * bessel_j_deriv(nu, n + k as u32, z);
        }
        zk *= z;
    }
    acc
}

/// Magnitude scale of [`combo_value`] terms, for noise-floor estimates:
/// `max_k |alpha_k| z^k sqrt(2/(pi z))`.
pub(crate) fn combo_scale(alpha: &[f64; 4], z: f64) -> f64 {
    let envelope = (2.0 / (std::f64::consts::PI * z)).sqrt();
    let mut scale = 0.0f64;
    let mut zk = 1.0f64;
    for &a in alpha.iter() {
        scale = scale.max(a.abs() * zk * envelope);
        zk *= z;
    }
    scale
}
