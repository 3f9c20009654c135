// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Parameter types: derivative order, normalization kind, geometric
//! property, and the truncation policy for series evaluation.

use crate::error::{Error, Result};
use crate::tolerances;

/// Order parameters `(nu, n)` of the `n`th derivative of the Bessel
/// function of the first kind `J_nu`.
///
/// The admissible range is `nu > n - 1`: there the power-series
/// coefficients of the normalized derivative are all positive, the zeros
/// are real and simple, and the radius problems below are well posed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    nu: f64,
    n: u32,
}

impl Order {
    /// Validates `nu > n - 1` (and finiteness) and builds the order.
    ///
    /// # Errors
    ///
    /// [`Error::Domain`] if `nu` is not finite or `nu <= n - 1`.
    pub fn new(nu: f64, n: u32) -> Result<Self> {
        if !nu.is_finite() {
            return Err(Error::Domain(format!("nu must be finite, got {nu}")));
        }
        if nu <= n as f64 - 1.0 {
            return Err(Error::Domain(format!(
                "require nu > n - 1: got nu = {nu}, n = {n}"
            )));
        }
        Ok(Self { nu, n })
    }

    /// Bessel order `nu`.
    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Derivative order `n`.
    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The frequently needed difference `nu - n`.
    ///
    /// Positive for `nu > n`, in `(-1, 0)` on the lower admissible strip
    /// `n - 1 < nu < n`.
    #[inline]
    pub fn nu_minus_n(&self) -> f64 {
        self.nu - self.n as f64
    }
}

/// Which normalization of the `n`th Bessel derivative is meant.
///
/// All three are normalized so that the function value and first
/// derivative at the origin match the identity, which is what the radius
/// definitions require.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Power normalization `f(z) = z * (normalized series)^(1/(nu-n))`;
    /// needs `nu != n` so the exponent is finite.
    F,
    /// Linear normalization `g(z) = z * (normalized series)(z)`.
    G,
    /// Squared-argument normalization `h(Z) = Z * (normalized series)(sqrt
    /// Z)`; note that `h` lives in its own variable `Z = z^2`.
    H,
}

impl Kind {
    /// Lower-case name used in command-line output.
    pub fn name(&self) -> &'static str {
        match self {
            Kind::F => "f",
            Kind::G => "g",
            Kind::H => "h",
        }
    }
}

/// Geometric property whose radius is sought.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// Starlikeness of order `beta`.
    Starlike,
    /// Convexity of order `beta`.
    Convex,
}

impl Property {
    /// Lower-case name used in command-line output.
    pub fn name(&self) -> &'static str {
        match self {
            Property::Starlike => "starlike",
            Property::Convex => "convex",
        }
    }
}

/// Full parameter set for a radius problem: an order plus the order `beta`
/// of starlikeness/convexity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    /// Derivative order parameters.
    pub order: Order,
    /// Order of starlikeness or convexity, in `[0, 1)`.
    pub beta: f64,
}

impl Params {
    /// Validates `beta` in `[0, 1)` and builds the parameter set.
    ///
    /// # Errors
    ///
    /// [`Error::Domain`] if `beta` is not finite or lies outside `[0, 1)`.
    pub fn new(order: Order, beta: f64) -> Result<Self> {
        if !beta.is_finite() || !(0.0..1.0).contains(&beta) {
            return Err(Error::Domain(format!(
                "require 0 <= beta < 1: got beta = {beta}"
            )));
        }
        Ok(Self { order, beta })
    }
}

/// Truncation policy for power-series evaluation.
///
/// The defaults come from [`crate::tolerances`] and are right for every
/// in-scope computation; the fields are public so a caller with unusual
/// needs can trade accuracy for speed explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Relative truncation target; see [`tolerances::REL_TOL`].
    pub rel_tol: f64,
    /// Absolute floor for terms; see [`tolerances::ABS_TOL`].
    pub abs_tol: f64,
    /// Cap on the number of terms; see [`tolerances::MAX_TERMS`].
    pub max_terms: usize,
    /// Consecutive small terms required; see
    /// [`tolerances::CONSECUTIVE_SMALL`].
    pub consecutive_small: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            rel_tol: tolerances::REL_TOL,
            abs_tol: tolerances::ABS_TOL,
            max_terms: tolerances::MAX_TERMS,
            consecutive_small: tolerances::CONSECUTIVE_SMALL,
        }
    }
}
