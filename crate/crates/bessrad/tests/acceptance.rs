// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Acceptance gate: end-to-end checks of every user-facing numerical
//! guarantee, each as one test emitting one pass/fail line.
//!
//! Tolerances here are contractual: loosening them is a behavior change,
//! not a test fix.

use std::time::Instant;

use bessrad::hyperbolic::{self, Poly};
use bessrad::rayleigh::{
    self, auxiliary_sums, radius_bounds, zero_power_sum, AuxFamily, BoundsTarget,
};
use bessrad::zeros::{check_interlacing, find_zeros, first_zero, ZeroFamily};
use bessrad::{
    convex_radius, eval_bessel_deriv, reference, starlike_radius, Branch, Kind, Order, Params,
    TruncationPolicy,
};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};

fn policy() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn order(nu: f64, n: u32) -> Order {
    Order::new(nu, n).unwrap()
}

fn params(nu: f64, n: u32, beta: f64) -> Params {
    Params::new(order(nu, n), beta).unwrap()
}

/// The admissible `(nu, n)` grid: `nu` in `{0.5, 1.5, 2.5, 3.5}`, `n` in
/// `{0, 1, 2, 3}`, keeping `nu > n - 1` (13 pairs).
fn grid() -> Vec<(f64, u32)> {
    let mut pairs = Vec::new();
    for &nu in &[0.5f64, 1.5, 2.5, 3.5] {
        for n in 0..4u32 {
            if nu > n as f64 - 1.0 {
                pairs.push((nu, n));
            }
        }
    }
    assert_eq!(pairs.len(), 13);
    pairs
}

/// Reference starlike radii at `nu = 2.5` (four decimals), rows `n = 0..3`,
/// columns `beta = 0` and `beta = 1/2`. The `n = 3` row lies on the strip
/// `n - 1 < nu < n` and is served by the modified branch.
const STARLIKE_REFERENCE: [(Kind, [[f64; 2]; 4]); 3] = [
    (
        Kind::F,
        [
            [3.6328, 2.7569],
            [2.1056, 1.5926],
            [0.8512, 0.6229],
            [0.4586, 0.3051],
        ],
    ),
    (
        Kind::G,
        [
            [2.5011, 1.8192],
            [1.7975, 1.3307],
            [1.1285, 0.8512],
            [0.4819, 0.3703],
        ],
    ),
    (
        Kind::H,
        [
            [11.1696, 6.2556],
            [5.4265, 3.2312],
            [2.0284, 1.2735],
            [0.3543, 0.2323],
        ],
    ),
];

/// Reference convex radii at `nu = 3.5` (four decimals), same layout.
/// The `(g, n = 0, beta = 0)` entry is irreconcilable with the sum-rule
/// enclosure of that radius (which pins it between 1.414 and 1.636); it is
/// kept verbatim and *flagged* rather than matched.
// The frozen four-decimal cell 2.7183 happens to round `e`; it is tabulated
// data, not a math constant.
#[allow(clippy::approx_constant)]
const CONVEX_REFERENCE: [(Kind, [[f64; 2]; 4]); 3] = [
    (
        Kind::F,
        [
            [2.7183, 2.0865],
            [1.8179, 1.3998],
            [1.0592, 0.8123],
            [0.4141, 0.3131],
        ],
    ),
    (
        Kind::G,
        [
            [0.5234, 1.1461],
            [1.2017, 0.9084],
            [0.8833, 0.6715],
            [0.5683, 0.4350],
        ],
    ),
    (
        Kind::H,
        [
            [6.2189, 3.7194],
            [3.7394, 2.2873],
            [1.9450, 1.2190],
            [0.7726, 0.4968],
        ],
    ),
];

const TABLE_TOL: f64 = 1e-3;

#[test]
fn starlike_radius_table() {
    let started = Instant::now();
    let policy = policy();
    let mut worst = 0.0f64;
    for &(kind, ref rows) in &STARLIKE_REFERENCE {
        for (n, row) in rows.iter().enumerate() {
            for (b, &want) in row.iter().enumerate() {
                let beta = 0.5 * b as f64;
                let p = params(2.5, n as u32, beta);
                let r = starlike_radius(kind, &p, &policy).unwrap();
                let dev = (r.radius - want).abs();
                worst = worst.max(dev);
                assert!(
                    dev <= TABLE_TOL,
                    "starlike {} n={n} beta={beta}: {} vs {want}",
                    kind.name(),
                    r.radius
                );
                if kind == Kind::F && n == 3 {
                    assert_eq!(r.branch, Branch::Modified);
                }
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "table exceeded its 30 s budget: {elapsed:?}"
    );
    println!(
        "PASS starlike_radius_table: 24/24 within {TABLE_TOL:.0e} (worst {worst:.2e}) in {:.2?}",
        elapsed
    );
}

#[test]
fn convex_radius_table_with_anomaly_flag() {
    let policy = policy();
    let mut worst = 0.0f64;
    let mut anomaly_line = String::new();
    for &(kind, ref rows) in &CONVEX_REFERENCE {
        for (n, row) in rows.iter().enumerate() {
            let mut computed_row = [0.0f64; 2];
            for (b, &want) in row.iter().enumerate() {
                let beta = 0.5 * b as f64;
                let p = params(3.5, n as u32, beta);
                let r = convex_radius(kind, &p, &policy).unwrap();
                computed_row[b] = r.radius;
                let dev = (r.radius - want).abs();
                if kind == Kind::G && n == 0 && b == 0 {
                    // Flagged entry: the computed radius must instead sit
                    // strictly inside its independent sum-rule enclosure.
                    let bounds = radius_bounds(BoundsTarget::ConvexG, &order(3.5, 0)).unwrap();
                    assert!(
                        dev > TABLE_TOL,
                        "flagged entry unexpectedly matches: {} vs {want}",
                        r.radius
                    );
                    assert!(
                        bounds.lower < r.radius && r.radius < bounds.upper,
                        "computed {} outside its enclosure ({}, {})",
                        r.radius,
                        bounds.lower,
                        bounds.upper
                    );
                    anomaly_line = format!(
                        "anomaly at (g, n=0, beta=0): reference {want} vs computed {:.4} \
                         (enclosure {:.4}..{:.4})",
                        r.radius, bounds.lower, bounds.upper
                    );
                } else {
                    worst = worst.max(dev);
                    assert!(
                        dev <= TABLE_TOL,
                        "convex {} n={n} beta={beta}: {} vs {want}",
                        kind.name(),
                        r.radius
                    );
                }
            }
            // Within each row the radius strictly decreases in beta.
            assert!(
                computed_row[1] < computed_row[0],
                "convex {} n={n}: not beta-monotone: {computed_row:?}",
                kind.name()
            );
        }
    }
    assert!(!anomaly_line.is_empty());
    println!("PASS convex_radius_table: 23/24 within {TABLE_TOL:.0e} (worst {worst:.2e}); {anomaly_line}");
}

#[test]
fn strip_order_radius_enclosures() {
    // At (nu, n) = (1.5, 2) the starlike radii of g and h admit exact
    // algebraic enclosures; the computed radii must land strictly inside.
    let policy = policy();
    let p = params(1.5, 2, 0.0);

    let rg = starlike_radius(Kind::G, &p, &policy).unwrap().radius;
    let (g_lo, g_hi) = ((2.0f64 / 7.0).sqrt(), (3.0f64 / 7.0).sqrt());
    assert!(
        g_lo < rg && rg < g_hi,
        "starlike g radius {rg} outside ({g_lo}, {g_hi})"
    );

    let rh = starlike_radius(Kind::H, &p, &policy).unwrap().radius;
    let (h_lo, h_hi) = (3.0 / 7.0, 2940.0 / 5969.0);
    assert!(
        h_lo < rh && rh < h_hi,
        "starlike h radius {rh} outside ({h_lo}, {h_hi})"
    );
    println!(
        "PASS strip_order_radius_enclosures: g {rg:.6} in ({g_lo:.6}, {g_hi:.6}); \
         h {rh:.6} in ({h_lo:.6}, {h_hi:.6})"
    );
}

#[test]
fn sum_identities_against_numeric_zeros() {
    // Closed-form reciprocal power sums vs direct summation over the
    // first 200 zeros plus a midpoint tail, at 1e-6 relative, for all 13
    // grid pairs and all five zero families.
    const TOL: f64 = 1e-6;
    let policy = policy();
    let mut checks = 0usize;
    let mut worst = 0.0f64;
    for (nu, n) in grid() {
        let o = order(nu, n);
        let mut confront = |closed: f64, which: ZeroFamily, power: u32| {
            let numeric =
                rayleigh::numeric_zero_power_sum(which, &o, power, 200, &policy).unwrap();
            let rel = (numeric - closed).abs() / closed.abs();
            worst = worst.max(rel);
            assert!(
                rel <= TOL,
                "(nu={nu}, n={n}) {which:?}^{power}: closed {closed} vs numeric {numeric} \
                 (rel {rel:.2e})"
            );
            checks += 1;
        };
        confront(
            zero_power_sum(&o, 2).unwrap().value,
            ZeroFamily::JDeriv,
            2,
        );
        confront(
            zero_power_sum(&o, 4).unwrap().value,
            ZeroFamily::JDeriv,
            4,
        );
        let (s1, s2) = auxiliary_sums(AuxFamily::Sigma, &o).unwrap();
        confront(s1.value, ZeroFamily::GPrime, 2);
        confront(s2.value, ZeroFamily::GPrime, 4);
        let (r1, r2) = auxiliary_sums(AuxFamily::Rho, &o).unwrap();
        confront(r1.value, ZeroFamily::HPrime, 2);
        confront(r2.value, ZeroFamily::HPrime, 4);
        let (k1, k2) = auxiliary_sums(AuxFamily::Kappa, &o).unwrap();
        confront(k1.value, ZeroFamily::Delta, 2);
        confront(k2.value, ZeroFamily::Delta, 4);
        let (o1, o2) = auxiliary_sums(AuxFamily::Omega, &o).unwrap();
        confront(o1.value, ZeroFamily::Theta, 2);
        confront(o2.value, ZeroFamily::Theta, 4);
    }
    assert_eq!(checks, 130);
    println!("PASS sum_identities_against_numeric_zeros: 130/130 within 1e-6 (worst {worst:.2e})");
}

#[test]
fn bound_sandwiches_at_order_zero() {
    // The sum-rule lower/upper bounds strictly bracket every order-zero
    // radius they target, across the whole grid.
    let policy = policy();
    let mut checks = 0usize;
    for (nu, n) in grid() {
        let o = order(nu, n);
        let p = params(nu, n, 0.0);
        let targets = [
            (BoundsTarget::StarlikeG, starlike_radius(Kind::G, &p, &policy).unwrap().radius),
            (BoundsTarget::StarlikeH, starlike_radius(Kind::H, &p, &policy).unwrap().radius),
            (BoundsTarget::ConvexG, convex_radius(Kind::G, &p, &policy).unwrap().radius),
            (BoundsTarget::ConvexH, convex_radius(Kind::H, &p, &policy).unwrap().radius),
        ];
        for (target, radius) in targets {
            let b = radius_bounds(target, &o).unwrap();
            assert!(
                b.lower < radius && radius < b.upper,
                "(nu={nu}, n={n}) {}: {radius} not in ({}, {})",
                target.name(),
                b.lower,
                b.upper
            );
            if let Some(extra) = b.extra_upper {
                assert!(
                    radius < extra,
                    "(nu={nu}, n={n}) {}: {radius} >= extra upper {extra}",
                    target.name()
                );
            }
            checks += 1;
        }
    }
    assert_eq!(checks, 52);
    println!("PASS bound_sandwiches_at_order_zero: 52/52 radii strictly inside their bounds");
}

#[test]
fn structural_orderings() {
    let policy = policy();

    // (a) The first ten zeros of consecutive derivative orders interlace
    // (higher derivative first) whenever nu > n.
    let mut interlacings = 0usize;
    for (nu, n) in grid() {
        if nu <= n as f64 {
            continue;
        }
        let lower = find_zeros(ZeroFamily::JDeriv, &order(nu, n), 10, &policy).unwrap();
        let higher = find_zeros(ZeroFamily::JDeriv, &order(nu, n + 1), 10, &policy).unwrap();
        let rep = check_interlacing(&higher.zeros, &lower.zeros).unwrap();
        assert!(
            rep.interlaced,
            "(nu={nu}, n={n}) interlacing violated at {:?}",
            rep.first_violation
        );
        interlacings += 1;
    }

    // (b) Structural zero orderings behind the radii, on every grid pair:
    // the convexity-numerator zero precedes the derivative zero, which
    // precedes the plain zero, in both variables.
    for (nu, n) in grid() {
        let o = order(nu, n);
        let j1 = first_zero(ZeroFamily::JDeriv, &o, &policy).unwrap();
        let gamma1 = first_zero(ZeroFamily::GPrime, &o, &policy).unwrap();
        let d1 = first_zero(ZeroFamily::Delta, &o, &policy).unwrap();
        let delta1 = first_zero(ZeroFamily::HPrime, &o, &policy).unwrap();
        let l1 = first_zero(ZeroFamily::Theta, &o, &policy).unwrap();
        assert!(
            d1 < gamma1 && gamma1 < j1,
            "(nu={nu}, n={n}): {d1}, {gamma1}, {j1}"
        );
        assert!(
            l1 < delta1 && delta1 < j1 * j1,
            "(nu={nu}, n={n}): {l1}, {delta1}, {}",
            j1 * j1
        );
    }

    // (c) Convexity radius strictly below the starlikeness radius for
    // every kind defined at the pair, and strict decrease in beta.
    for (nu, n) in grid() {
        for kind in [Kind::F, Kind::G, Kind::H] {
            if kind == Kind::F && nu <= n as f64 {
                continue;
            }
            let mut prev_star = f64::INFINITY;
            let mut prev_conv = f64::INFINITY;
            for &beta in &[0.0, 0.25, 0.5, 0.75] {
                let p = params(nu, n, beta);
                let star = starlike_radius(kind, &p, &policy).unwrap().radius;
                let conv = convex_radius(kind, &p, &policy).unwrap().radius;
                assert!(conv < star, "(nu={nu}, n={n}) {}: {conv} vs {star}", kind.name());
                assert!(
                    star < prev_star && conv < prev_conv,
                    "(nu={nu}, n={n}) {} beta={beta}: not decreasing",
                    kind.name()
                );
                prev_star = star;
                prev_conv = conv;
            }
        }
    }

    // (d) Strict decrease in the derivative order n at fixed nu and beta.
    for kind in [Kind::F, Kind::G, Kind::H] {
        for &beta in &[0.0, 0.5] {
            let mut prev = f64::INFINITY;
            for n in 0..4u32 {
                let p = params(3.5, n, beta);
                let r = starlike_radius(kind, &p, &policy).unwrap().radius;
                assert!(
                    r < prev,
                    "{} beta={beta}: radius not decreasing in n at n={n}",
                    kind.name()
                );
                prev = r;
            }
        }
    }
    println!(
        "PASS structural_orderings: {interlacings} interlacings, zero orderings, \
         convex<starlike, monotone in beta and n"
    );
}

#[test]
fn product_over_zeros_matches_series() {
    // The compensated product over 200 zeros reconstructs the normalized
    // series to 1e-6 relative on the inner half of the first zero's
    // interval.
    const TOL: f64 = 1e-6;
    let policy = policy();
    let mut worst = 0.0f64;
    for &(nu, n) in &[(0.5f64, 0u32), (1.5, 1), (2.5, 2), (3.5, 3)] {
        let o = order(nu, n);
        let j1 = first_zero(ZeroFamily::JDeriv, &o, &policy).unwrap();
        for i in 1..=8 {
            let z = 0.5 * j1 * i as f64 / 8.0;
            let series = bessrad::eval_normalized(Kind::G, &o, z, &policy).unwrap() / z;
            let product = rayleigh::truncated_product(&o, z, 200, &policy).unwrap();
            let rel = (series - product).abs() / series.abs();
            worst = worst.max(rel);
            assert!(
                rel <= TOL,
                "(nu={nu}, n={n}) z={z}: series {series} vs product {product} (rel {rel:.2e})"
            );
        }
    }
    println!("PASS product_over_zeros_matches_series: 32/32 within 1e-6 (worst {worst:.2e})");
}

#[test]
fn exact_polynomial_certificates() {
    // (a) 100 random hyperbolic polynomials with positive roots: the
    // pencil q = C p - x p' is always hyperbolic and has a root in the
    // gap below the smallest root exactly when C < 0. Roots and C are
    // random small rationals (distinct roots k/16, C = k/32) so the exact
    // Sturm arithmetic stays fast.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for trial in 0..100 {
        let degree = rng.gen_range(2..=8usize);
        let mut numerators: Vec<i64> = Vec::with_capacity(degree);
        let mut p = Poly::new(vec![BigRational::one()]);
        for _ in 0..degree {
            let k = loop {
                let k = rng.gen_range(2..=160i64);
                if !numerators.contains(&k) {
                    break k;
                }
            };
            numerators.push(k);
            // Multiply by (1 - x / (k/16)), exactly.
            let factor = Poly::new(vec![
                BigRational::one(),
                -BigRational::new(16.into(), k.into()),
            ]);
            p = poly_mul(&p, &factor);
        }
        let negative = trial % 2 == 0;
        let c = if negative {
            BigRational::new((-rng.gen_range(2..=96i64)).into(), 32.into())
        } else {
            BigRational::new(
                rng.gen_range(0..=32 * (degree as i64 + 2)).into(),
                32.into(),
            )
        };
        let rep = hyperbolic::verify_hyperbolic_pencil(&p, &c).unwrap();
        assert!(rep.hyperbolic, "trial {trial}: pencil not hyperbolic");
        let expected_gap = if negative { 1 } else { 0 };
        assert_eq!(
            rep.roots_in_gap, expected_gap,
            "trial {trial}: C = {c}, degree {degree}"
        );
    }

    // (b) Exact precedence of the pencil root below the truncation root
    // for the sweep of admissible (nu, n, a), with the floating-point
    // sign-change cross-check on the untruncated series.
    let policy = policy();
    let mut precedence_checks = 0usize;
    for &nu in &[0.5f64, 2.5, 3.5] {
        for n in 0..3u32 {
            if nu <= n as f64 - 1.0 {
                continue;
            }
            for &a in &[-1.0f64, -0.5, -0.25] {
                let rep =
                    hyperbolic::verify_zero_precedence(&order(nu, n), a, 8, &policy).unwrap();
                assert!(
                    rep.precedes && rep.function_sign_change,
                    "(nu={nu}, n={n}, a={a}): {rep:?}"
                );
                precedence_checks += 1;
            }
        }
    }
    assert_eq!(precedence_checks, 24);
    println!(
        "PASS exact_polynomial_certificates: 100 pencils, {precedence_checks} precedence checks"
    );
}

/// Exact polynomial product (test helper; quadratic algorithm is fine at
/// these degrees).
fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    use num_traits::Zero;
    let (ca, cb) = (a.coefficients(), b.coefficients());
    if ca.is_empty() || cb.is_empty() {
        return Poly::new(vec![]);
    }
    let mut out = vec![BigRational::zero(); ca.len() + cb.len() - 1];
    for (i, x) in ca.iter().enumerate() {
        for (j, y) in cb.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    Poly::new(out)
}

#[test]
fn half_integer_closed_form_agreement() {
    // The series engine agrees with hand-derived trigonometric forms of
    // J_{1/2}, J_{3/2} and their first two derivatives to 1e-10 relative
    // across z in [0.1, 10].
    const TOL: f64 = 1e-10;
    let policy = policy();
    let mut worst = 0.0f64;
    let mut checks = 0usize;
    // (order, derivative, closed form)
    type OracleRow = (f64, u32, fn(f64) -> f64);
    let references: [OracleRow; 6] = [
        (0.5, 0, reference::j_half),
        (0.5, 1, reference::j_half_deriv1),
        (0.5, 2, reference::j_half_deriv2),
        (1.5, 0, reference::j_three_halves),
        (1.5, 1, reference::j_three_halves_deriv1),
        (1.5, 2, reference::j_three_halves_deriv2),
    ];
    for &(nu, n, oracle) in &references {
        for k in 1..=100 {
            let z = 0.1 * k as f64;
            let want = oracle(z);
            let got = eval_bessel_deriv(nu, n, z, &policy).unwrap();
            let rel = (got - want).abs() / want.abs();
            worst = worst.max(rel);
            assert!(
                rel <= TOL,
                "J_{nu}^({n}) at z={z}: {got} vs {want} (rel {rel:.2e})"
            );
            checks += 1;
        }
    }
    assert_eq!(checks, 600);
    println!("PASS half_integer_closed_form_agreement: 600/600 within 1e-10 (worst {worst:.2e})");
}
