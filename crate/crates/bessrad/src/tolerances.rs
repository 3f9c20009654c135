// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Centralized tolerance and truncation constants.
//!
//! Every hard-coded numeric threshold used by the crate lives here, with a
//! note on where it comes from. Tests import these constants instead of
//! re-declaring magic numbers so that a deliberate retuning happens in
//! exactly one place.

/// Relative truncation target for power-series evaluation.
///
/// A series is considered converged once additional terms change the
/// accumulated sum by less than this factor. `1e-15` sits just above the
/// `f64` unit roundoff so a converged sum is accurate to the last `f64`
/// digit or two while never looping on noise.
pub const REL_TOL: f64 = 1e-15;

/// Absolute floor below which series terms are treated as exactly zero.
///
/// Chosen near the smallest positive normal `f64`; it only matters for
/// evaluation points so close to `0` that every term underflows.
pub const ABS_TOL: f64 = 1e-300;

/// Hard cap on the number of series terms examined before giving up.
///
/// The alternating series handled here need `O(z)` terms past the magnitude
/// hump; with the large-argument backend taking over at [`Z_SPLIT`], fewer
/// than 100 terms are ever needed in practice, so 500 is a generous margin
/// that still terminates quickly on mistaken inputs.
pub const MAX_TERMS: usize = 500;

/// Number of consecutive terms that must satisfy the truncation criterion
/// before the series is declared converged.
///
/// Alternating and polynomially-weighted series can have a single
/// accidentally tiny term; requiring three in a row rules that out.
pub const CONSECUTIVE_SMALL: usize = 3;

/// Relative width to which a zero bracket is bisected before Newton polish.
///
/// Bisection certifies the digit; the two guarded Newton steps that follow
/// converge quadratically from here to machine accuracy.
pub const BISECT_TOL: f64 = 1e-9;

/// Target accuracy of a refined zero, relative to `max(1, |z|)`.
///
/// Stored on every returned zero sequence as its accuracy contract.
pub const REFINE_TOL: f64 = 1e-12;

/// A refined zero must satisfy `|F(z)| <= ZERO_RESIDUAL_FACTOR * |F'(z)| *
/// max(1, z)`: the backward error is at most a `1e-9`-relative perturbation
/// of the abscissa.
pub const ZERO_RESIDUAL_FACTOR: f64 = 1e-9;

/// Minimum separation between two refined zeros, in units of
/// [`REFINE_TOL`]; a violation means one sign change was reported twice.
pub const SEPARATION_FACTOR: f64 = 10.0;

/// Residual bound for a solved radius: the defining equation evaluated at
/// the returned radius must be below this in absolute value.
pub const RADIUS_RESIDUAL: f64 = 1e-10;

/// Relative amount by which the open upper end of a radius bracket is
/// pulled inside the interval, keeping the solver away from the pole of the
/// quotient at the endpoint.
pub const BRACKET_SHRINK: f64 = 1e-9;

/// Step of the sign-change scan used by the zero finder.
///
/// The zeros of every function handled here are asymptotically `pi`-spaced
/// and never closer than about `pi/2`, so an eighth of `pi` cannot step
/// over a sign change pair.
pub const SCAN_STEP: f64 = std::f64::consts::PI / 8.0;

/// Smallest abscissa examined by the sign-change scan.
///
/// All scanned functions are positive at `0+`; starting slightly inside the
/// interval avoids evaluating exactly at the removable origin.
pub const SCAN_START: f64 = 1e-3;

/// Argument at which series evaluation hands over to the large-argument
/// (trigonometric) backend.
///
/// An alternating series at argument `z` cancels down by a factor of about
/// `e^z`, costing `0.434 z` decimal digits; extended-precision accumulation
/// carries ~31 digits, so at `z = 40` roughly 14 digits survive, and the
/// large-argument expansions are already at full accuracy there. Values
/// below the split use the series, values above use the expansion.
pub const Z_SPLIT: f64 = 40.0;

/// Noise-floor scale of the extended-precision series accumulator,
/// relative to the largest intermediate term.
///
/// Double-double arithmetic carries about 31 significant digits; a couple
/// of orders are surrendered to term-count growth. A computed sum smaller
/// than this fraction of the largest term is indistinguishable from zero.
pub const SERIES_NOISE: f64 = 1e-28;

/// Iteration cap for exact-arithmetic bisection used when two algebraic
/// numbers must be separated; reaching it raises
/// [`Error::IllConditioned`](crate::Error::IllConditioned).
pub const EXACT_BISECT_MAX_ITERS: usize = 256;

/// Largest supported order for binomially-weighted polynomial sections of
/// a power series; beyond this the weights are too ill-conditioned in
/// double precision to be meaningful.
pub const MAX_SECTION_ORDER: usize = 30;
