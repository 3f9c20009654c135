// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Error type shared by every module of the crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Unified error type for series evaluation, zero finding, root solving,
/// and polynomial verification.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter lies outside the mathematical domain of the requested
    /// operation (for example `nu <= n - 1` where positivity of the series
    /// coefficients is required, or `beta` outside `[0, 1)`).
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// A power series failed to meet its truncation criterion within the
    /// configured maximum number of terms.
    #[error(
        "series did not converge within {max_terms} terms \
         (argument {argument:e}, last term {last_term:e})"
    )]
    NonConvergence {
        /// Configured cap on the number of terms.
        max_terms: usize,
        /// Argument the series was evaluated at.
        argument: f64,
        /// Magnitude of the last term examined.
        last_term: f64,
    },

    /// A quotient of series was requested at a point where the denominator
    /// is indistinguishable from zero at working precision, i.e. the
    /// evaluation point is (numerically) a pole of the quotient.
    #[error("denominator vanishes near the evaluation point {at}: |denominator| = {denom:e}")]
    PoleProximity {
        /// Evaluation point.
        at: f64,
        /// Magnitude of the denominator series value.
        denom: f64,
    },

    /// A sign-change scan ran past its search limit before locating the
    /// requested number of zeros.
    #[error("zero scan exhausted at {limit}: found {found} of {requested} requested zeros")]
    ScanExhausted {
        /// Upper end of the scanned interval.
        limit: f64,
        /// Number of zeros found before giving up.
        found: usize,
        /// Number of zeros requested.
        requested: usize,
    },

    /// An input sequence is too short (or two sequences disagree in length)
    /// for the requested comparison.
    #[error("sequence length mismatch: {0}")]
    LengthMismatch(String),

    /// A root solver was handed (or produced) an interval without a sign
    /// change.
    #[error("no sign change in bracket [{lo}, {hi}]")]
    BracketFailure {
        /// Lower bracket endpoint.
        lo: f64,
        /// Upper bracket endpoint.
        hi: f64,
    },

    /// An exact or semi-exact computation degenerated numerically (for
    /// example a sign-variation chain that cannot separate two algebraic
    /// numbers within the iteration budget).
    #[error("ill-conditioned computation: {0}")]
    IllConditioned(String),
}
