// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Radii of starlikeness and convexity for normalized derivatives of
//! Bessel functions of the first kind.
//!
//! For `nu > n - 1` the `n`th derivative of the Bessel function `J_nu`
//! admits three natural normalizations that are analytic near the origin
//! and match the identity to first order:
//!
//! | name | definition (up to constants)                     | variable    |
//! |------|--------------------------------------------------|-------------|
//! | `f`  | `z * (series)^(1/(nu-n))`                        | `z`         |
//! | `g`  | `z * (series)(z)`                                | `z`         |
//! | `h`  | `Z * (series)(sqrt Z)`                           | `Z = z^2`   |
//!
//! where `(series)` is the power series of the derivative normalized to 1
//! at the origin. This crate computes, for each normalization:
//!
//! - function, quotient, and derivative-quotient values ([`series`]);
//! - real zeros of the derivative and of the auxiliary functions whose
//!   zeros control the radii ([`zeros`]);
//! - the radii of starlikeness and convexity of order `beta`
//!   ([`radii`]);
//! - closed-form reciprocal power sums over those zeros together with the
//!   derived lower/upper radius bounds ([`rayleigh`]);
//! - exact-arithmetic verification of the hyperbolic-polynomial facts the
//!   radius theory rests on ([`hyperbolic`]).
//!
//! # Example
//!
//! ```
//! use bessrad::{starlike_radius, Kind, Order, Params};
//!
//! let order = Order::new(2.5, 1).unwrap();
//! let params = Params::new(order, 0.0).unwrap();
//! let r = starlike_radius(Kind::G, &params, &Default::default()).unwrap();
//! assert!((r.radius - 1.7975).abs() < 1e-3);
//! ```
//!
//! # Numerical scheme
//!
//! Series are summed in double-double precision below [`tolerances::Z_SPLIT`]
//! and by exact/asymptotic trigonometric expansions above it, so zeros with
//! index into the hundreds are available at full `f64` accuracy. All root
//! finding is bracketed bisection with sign-certified intervals plus two
//! guarded Newton polish steps; every returned zero and radius carries a
//! residual certificate.

// Input guards are written `!(x > 0.0)` on purpose: the negated form also
// rejects NaN, which the direct comparison would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod hyperbolic;
pub mod params;
pub mod radii;
pub mod rayleigh;
pub mod reference;
pub mod series;
pub mod tolerances;
pub mod zeros;

mod asymptotic;
mod dd;
mod gamma;

pub use error::{Error, Result};
pub use params::{Kind, Order, Params, Property, TruncationPolicy};
pub use radii::{convex_radius, starlike_radius, Branch, RadiusResult};
pub use rayleigh::{
    auxiliary_sums, radius_bounds, zero_power_sum, AuxFamily, BoundsPair, BoundsTarget, SumFamily,
    SumValue,
};
pub use series::{
    eval_bessel_deriv, eval_convex_quotient, eval_modified_quotient, eval_normalized,
    eval_star_quotient,
};
pub use zeros::{check_interlacing, find_zeros, InterlacingReport, ZeroFamily, ZeroSequence};
