// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Closed-form half-integer Bessel functions and their first two
//! derivatives, written directly in terms of `sin`/`cos`.
//!
//! These serve as independent oracles for the series engine: they share no
//! code with it (no Gamma function, no recurrence, no asymptotic
//! expansion), so agreement is meaningful evidence of correctness.
//!
//! All forms follow from `J_{1/2}(z) = sqrt(2/(pi z)) sin z` and
//! `J_{3/2}(z) = sqrt(2/(pi z)) (sin z / z - cos z)` by direct
//! differentiation.

/// Common amplitude `sqrt(2 / (pi z))`.
#[inline]
fn amp(z: f64) -> f64 {
    (2.0 / (std::f64::consts::PI * z)).sqrt()
}

/// `J_{1/2}(z)`.
pub fn j_half(z: f64) -> f64 {
    amp(z) * z.sin()
}

/// `d/dz J_{1/2}(z)`.
pub fn j_half_deriv1(z: f64) -> f64 {
    amp(z) * (z.cos() - z.sin() / (2.0 * z))
}

/// `d^2/dz^2 J_{1/2}(z)`.
pub fn j_half_deriv2(z: f64) -> f64 {
    let (s, c) = z.sin_cos();
    amp(z) * (-s - c / z + 3.0 * s / (4.0 * z * z))
}

/// `J_{3/2}(z)`.
pub fn j_three_halves(z: f64) -> f64 {
    let (s, c) = z.sin_cos();
    amp(z) * (s / z - c)
}

/// `d/dz J_{3/2}(z)`.
pub fn j_three_halves_deriv1(z: f64) -> f64 {
    let (s, c) = z.sin_cos();
    amp(z) * (s + 1.5 * c / z - 1.5 * s / (z * z))
}

/// `d^2/dz^2 J_{3/2}(z)`.
pub fn j_three_halves_deriv2(z: f64) -> f64 {
    let (s, c) = z.sin_cos();
    let z2 = z * z;
    amp(z) * (c - 2.0 * s / z - 3.75 * c / z2 + 3.75 * s / (z2 * z))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Central-difference derivative at two step sizes, Richardson-combined.
    fn numeric_deriv(f: impl Fn(f64) -> f64, z: f64) -> f64 {
        let h = 1e-5 * z.max(1.0);
        let d1 = (f(z + h) - f(z - h)) / (2.0 * h);
        let d2 = (f(z + h / 2.0) - f(z - h / 2.0)) / h;
        (4.0 * d2 - d1) / 3.0
    }

    #[test]
    fn derivatives_are_consistent_with_their_bases() {
        for &z in &[0.4, 1.1, 2.9, 7.3, 9.8] {
            assert!((numeric_deriv(j_half, z) - j_half_deriv1(z)).abs() < 1e-9);
            assert!((numeric_deriv(j_half_deriv1, z) - j_half_deriv2(z)).abs() < 1e-9);
            assert!((numeric_deriv(j_three_halves, z) - j_three_halves_deriv1(z)).abs() < 1e-9);
            assert!(
                (numeric_deriv(j_three_halves_deriv1, z) - j_three_halves_deriv2(z)).abs() < 1e-9
            );
        }
    }

    #[test]
    fn three_halves_from_recurrence() {
        // Standard ladder: J_{nu+1} = (nu/z) J_nu - J_nu' at nu = 1/2.
        for &z in &[0.7, 2.2, 5.5, 9.1] {
            let lhs = j_three_halves(z);
            let rhs = j_half(z) / (2.0 * z) - j_half_deriv1(z);
            assert!((lhs - rhs).abs() < 1e-14, "z = {z}: {lhs} vs {rhs}");
        }
    }
}
