// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Verification suites: deterministic end-to-end consistency checks over
//! a parameter grid, reported per suite.

use bessrad::hyperbolic::{self, Poly};
use bessrad::rayleigh::{
    self, auxiliary_sums, radius_bounds, zero_power_sum, AuxFamily, BoundsTarget,
};
use bessrad::zeros::{check_interlacing, find_zeros, ZeroFamily};
use bessrad::{
    convex_radius, eval_bessel_deriv, reference, starlike_radius, Kind, Order, Params, Property,
    TruncationPolicy,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

/// Seed for the randomized polynomial suite; fixed so runs are
/// reproducible.
const PENCIL_SEED: u64 = 7;

/// Relative tolerance for closed-form vs numeric sum agreement.
const SUM_TOL: f64 = 1e-6;

/// Relative tolerance for series vs closed-form oracle agreement.
const ORACLE_TOL: f64 = 1e-10;

/// Outcome of one suite.
#[derive(Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// First few failure descriptions.
    pub details: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            checks: 0,
            failures: 0,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.details.len() < 8 {
                self.details.push(detail());
            }
        }
    }

    /// Records an unexpected error as a failed check.
    fn error(&mut self, detail: String) {
        self.check(false, || detail);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// The verification grid: requested orders and the admissible pairs.
pub struct VerifyConfig {
    pub nus: Vec<f64>,
    pub ns: Vec<u32>,
    pub pairs: Vec<(f64, u32)>,
}

/// Builds the grid from the command-line selection. A single explicit
/// `(nu, n)` pair must itself be admissible; otherwise the grid is the
/// cross product filtered to admissible pairs, which must be non-empty.
pub fn build_config(
    grid_nu: Option<Vec<f64>>,
    nu: Option<f64>,
    n: Option<u32>,
) -> Result<VerifyConfig, String> {
    let nus = match nu {
        Some(v) => vec![v],
        None => grid_nu.unwrap_or_else(|| vec![0.5, 1.5, 2.5, 3.5]),
    };
    if nus.is_empty() {
        return Err("--grid-nu must name at least one order".to_string());
    }
    for &v in &nus {
        if !v.is_finite() {
            return Err(format!("grid order {v} is not finite"));
        }
    }
    let ns: Vec<u32> = match n {
        Some(k) => vec![k],
        None => (0..4).collect(),
    };
    if let (Some(v), Some(k)) = (nu, n) {
        Order::new(v, k).map_err(|e| e.to_string())?;
    }
    let mut pairs = Vec::new();
    for &v in &nus {
        for &k in &ns {
            if Order::new(v, k).is_ok() {
                pairs.push((v, k));
            }
        }
    }
    if pairs.is_empty() {
        return Err("no admissible (nu, n) pairs in the requested grid".to_string());
    }
    Ok(VerifyConfig { nus, ns, pairs })
}

/// Runs all seven suites in a fixed order.
pub fn run_all(config: &VerifyConfig, policy: &TruncationPolicy) -> Vec<SuiteReport> {
    vec![
        interlacing_suite(config, policy),
        sum_identity_suite(config, policy),
        bounds_sandwich_suite(config, policy),
        monotonicity_suite(config, policy),
        pencil_hyperbolicity_suite(),
        zero_precedence_suite(config, policy),
        oracle_agreement_suite(policy),
    ]
}

/// First ten zeros of consecutive derivative orders interlace whenever
/// `nu > n`.
fn interlacing_suite(config: &VerifyConfig, policy: &TruncationPolicy) -> SuiteReport {
    let mut report = SuiteReport::new("interlacing");
    for &(nu, n) in &config.pairs {
        if nu <= n as f64 {
            continue;
        }
        let outcome = (|| {
            let lower = find_zeros(ZeroFamily::JDeriv, &Order::new(nu, n)?, 10, policy)?;
            let higher = find_zeros(ZeroFamily::JDeriv, &Order::new(nu, n + 1)?, 10, policy)?;
            check_interlacing(&higher.zeros, &lower.zeros)
        })();
        match outcome {
            Ok(rep) => report.check(rep.interlaced, || {
                format!(
                    "(nu={nu}, n={n}): interlacing broken at chain position {:?}",
                    rep.first_violation
                )
            }),
            Err(e) => report.error(format!("(nu={nu}, n={n}): {e}")),
        }
    }
    report
}

/// Closed-form reciprocal power sums match direct summation over 200
/// zeros plus a tail estimate, for all five zero families.
fn sum_identity_suite(config: &VerifyConfig, policy: &TruncationPolicy) -> SuiteReport {
    let mut report = SuiteReport::new("sum-identity");
    for &(nu, n) in &config.pairs {
        let order = match Order::new(nu, n) {
            Ok(o) => o,
            Err(e) => {
                report.error(format!("(nu={nu}, n={n}): {e}"));
                continue;
            }
        };
        let mut confront = |closed: bessrad::Result<f64>, which: ZeroFamily, power: u32| {
            let outcome = closed.and_then(|c| {
                rayleigh::numeric_zero_power_sum(which, &order, power, 200, policy)
                    .map(|num| (c, num))
            });
            match outcome {
                Ok((c, num)) => {
                    let rel = (num - c).abs() / c.abs();
                    report.check(rel <= SUM_TOL, || {
                        format!(
                            "(nu={nu}, n={n}) {}^{power}: closed {c} vs numeric {num} \
                             (rel {rel:.2e})",
                            which.name()
                        )
                    });
                }
                Err(e) => report.error(format!("(nu={nu}, n={n}) {}: {e}", which.name())),
            }
        };
        confront(
            zero_power_sum(&order, 2).map(|s| s.value),
            ZeroFamily::JDeriv,
            2,
        );
        confront(
            zero_power_sum(&order, 4).map(|s| s.value),
            ZeroFamily::JDeriv,
            4,
        );
        for (family, which) in [
            (AuxFamily::Sigma, ZeroFamily::GPrime),
            (AuxFamily::Rho, ZeroFamily::HPrime),
            (AuxFamily::Kappa, ZeroFamily::Delta),
            (AuxFamily::Omega, ZeroFamily::Theta),
        ] {
            confront(auxiliary_sums(family, &order).map(|p| p.0.value), which, 2);
            confront(auxiliary_sums(family, &order).map(|p| p.1.value), which, 4);
        }
    }
    report
}

/// Sum-rule bounds strictly bracket the order-zero radii of g and h.
fn bounds_sandwich_suite(config: &VerifyConfig, policy: &TruncationPolicy) -> SuiteReport {
    let mut report = SuiteReport::new("bounds-sandwich");
    for &(nu, n) in &config.pairs {
        let outcome = (|| {
            let order = Order::new(nu, n)?;
            let params = Params::new(order, 0.0)?;
            Ok::<_, bessrad::Error>([
                (
                    BoundsTarget::StarlikeG,
                    starlike_radius(Kind::G, &params, policy)?.radius,
                ),
                (
                    BoundsTarget::StarlikeH,
                    starlike_radius(Kind::H, &params, policy)?.radius,
                ),
                (
                    BoundsTarget::ConvexG,
                    convex_radius(Kind::G, &params, policy)?.radius,
                ),
                (
                    BoundsTarget::ConvexH,
                    convex_radius(Kind::H, &params, policy)?.radius,
                ),
            ])
        })();
        let targets = match outcome {
            Ok(t) => t,
            Err(e) => {
                report.error(format!("(nu={nu}, n={n}): {e}"));
                continue;
            }
        };
        for (target, radius) in targets {
            match radius_bounds(target, &Order::new(nu, n).expect("validated")) {
                Ok(b) => {
                    let inside = b.lower < radius
                        && radius < b.upper
                        && b.extra_upper.is_none_or(|x| radius < x);
                    report.check(inside, || {
                        format!(
                            "(nu={nu}, n={n}) {}: {radius} not strictly inside \
                             ({}, {}) (extra {:?})",
                            target.name(),
                            b.lower,
                            b.upper,
                            b.extra_upper
                        )
                    });
                }
                Err(e) => report.error(format!("(nu={nu}, n={n}) {}: {e}", target.name())),
            }
        }
    }
    report
}

/// Kinds whose radius is defined at `(nu, n)` for the given property.
fn kinds_for(nu: f64, n: u32, property: Property) -> Vec<Kind> {
    let q = nu - n as f64;
    let mut kinds = vec![Kind::G, Kind::H];
    let f_defined = match property {
        Property::Starlike => q.abs() > 1e-9,
        Property::Convex => q > 1e-9,
    };
    if f_defined {
        kinds.push(Kind::F);
    }
    kinds
}

/// Radii decrease strictly in beta (chain 0, 1/4, 1/2, 3/4) and in the
/// derivative order n at beta = 0.
fn monotonicity_suite(config: &VerifyConfig, policy: &TruncationPolicy) -> SuiteReport {
    let mut report = SuiteReport::new("monotonicity");
    let radius_of = |kind: Kind, nu: f64, n: u32, beta: f64, property: Property| {
        let params = Params::new(Order::new(nu, n)?, beta)?;
        match property {
            Property::Starlike => starlike_radius(kind, &params, policy),
            Property::Convex => convex_radius(kind, &params, policy),
        }
        .map(|r| r.radius)
    };
    for &(nu, n) in &config.pairs {
        for property in [Property::Starlike, Property::Convex] {
            for kind in kinds_for(nu, n, property) {
                let chain: Result<Vec<f64>, _> = [0.0, 0.25, 0.5, 0.75]
                    .iter()
                    .map(|&beta| radius_of(kind, nu, n, beta, property))
                    .collect();
                match chain {
                    Ok(values) => {
                        report.check(values.windows(2).all(|w| w[1] < w[0]), || {
                            format!(
                                "(nu={nu}, n={n}) {} {}: not strictly decreasing in \
                                 beta: {values:?}",
                                property.name(),
                                kind.name()
                            )
                        });
                    }
                    Err(e) => report.error(format!(
                        "(nu={nu}, n={n}) {} {}: {e}",
                        property.name(),
                        kind.name()
                    )),
                }
            }
        }
    }
    for &nu in &config.nus {
        for w in config.ns.windows(2) {
            let (n0, n1) = (w[0], w[1]);
            if n1 != n0 + 1 || Order::new(nu, n1).is_err() {
                continue;
            }
            for property in [Property::Starlike, Property::Convex] {
                for kind in [Kind::F, Kind::G, Kind::H] {
                    let defined = kinds_for(nu, n0, property).contains(&kind)
                        && kinds_for(nu, n1, property).contains(&kind);
                    if !defined {
                        continue;
                    }
                    let outcome = radius_of(kind, nu, n0, 0.0, property)
                        .and_then(|a| radius_of(kind, nu, n1, 0.0, property).map(|b| (a, b)));
                    match outcome {
                        Ok((a, b)) => report.check(b < a, || {
                            format!(
                                "(nu={nu}) {} {}: radius grew from n={n0} ({a}) to \
                                 n={n1} ({b})",
                                property.name(),
                                kind.name()
                            )
                        }),
                        Err(e) => report.error(format!(
                            "(nu={nu}, n={n0}->{n1}) {} {}: {e}",
                            property.name(),
                            kind.name()
                        )),
                    }
                }
            }
        }
    }
    report
}

/// Exact product of polynomials (small degrees only).
fn poly_mul(a: &Poly, b: &Poly) -> Poly {
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

/// 100 random polynomials with known positive real roots: the pencil
/// `C p - x p'` is always hyperbolic, with a root in the gap below the
/// smallest root of `p` exactly when `C < 0`. Roots and `C` are random
/// small rationals (distinct roots `k/16`, `C = k/32`) so the exact Sturm
/// arithmetic stays fast.
fn pencil_hyperbolicity_suite() -> SuiteReport {
    let mut report = SuiteReport::new("pencil-hyperbolicity");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(PENCIL_SEED);
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
        match hyperbolic::verify_hyperbolic_pencil(&p, &c) {
            Ok(rep) => {
                let expected_gap = usize::from(negative);
                report.check(rep.hyperbolic && rep.roots_in_gap == expected_gap, || {
                    format!(
                        "trial {trial} (degree {degree}, C {c}): hyperbolic={}, \
                         gap roots {} (expected {expected_gap})",
                        rep.hyperbolic, rep.roots_in_gap
                    )
                });
            }
            Err(e) => report.error(format!("trial {trial}: {e}")),
        }
    }
    report
}

/// For negative weights `a`, the smallest positive root of the pencil of
/// the degree-8 series truncation certifiably precedes the truncation's
/// own smallest root, matching the sign change of the full series.
fn zero_precedence_suite(config: &VerifyConfig, policy: &TruncationPolicy) -> SuiteReport {
    let mut report = SuiteReport::new("zero-precedence");
    for &(nu, n) in &config.pairs {
        if n > 2 {
            continue;
        }
        let order = match Order::new(nu, n) {
            Ok(o) => o,
            Err(e) => {
                report.error(format!("(nu={nu}, n={n}): {e}"));
                continue;
            }
        };
        for &a in &[-1.0f64, -0.5, -0.25] {
            match hyperbolic::verify_zero_precedence(&order, a, 8, policy) {
                Ok(rep) => report.check(rep.precedes && rep.function_sign_change, || {
                    format!(
                        "(nu={nu}, n={n}, a={a}): precedes={}, sign change={}",
                        rep.precedes, rep.function_sign_change
                    )
                }),
                Err(e) => report.error(format!("(nu={nu}, n={n}, a={a}): {e}")),
            }
        }
    }
    report
}

/// The series engine agrees with the half-integer closed forms across
/// `z` in `[0.1, 10]`.
fn oracle_agreement_suite(policy: &TruncationPolicy) -> SuiteReport {
    let mut report = SuiteReport::new("oracle-agreement");
    // (order, derivative, closed form)
    type OracleRow = (f64, u32, fn(f64) -> f64);
    let oracles: [OracleRow; 6] = [
        (0.5, 0, reference::j_half),
        (0.5, 1, reference::j_half_deriv1),
        (0.5, 2, reference::j_half_deriv2),
        (1.5, 0, reference::j_three_halves),
        (1.5, 1, reference::j_three_halves_deriv1),
        (1.5, 2, reference::j_three_halves_deriv2),
    ];
    for &(nu, n, oracle) in &oracles {
        for k in 1..=100 {
            let z = 0.1 * k as f64;
            let want = oracle(z);
            match eval_bessel_deriv(nu, n, z, policy) {
                Ok(got) => {
                    let rel = (got - want).abs() / want.abs();
                    report.check(rel <= ORACLE_TOL, || {
                        format!(
                            "J_{nu} derivative {n} at z={z}: series {got} vs closed \
                             form {want} (rel {rel:.2e})"
                        )
                    });
                }
                Err(e) => report.error(format!("J_{nu} derivative {n} at z={z}: {e}")),
            }
        }
    }
    report
}
