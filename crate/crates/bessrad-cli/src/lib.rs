// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Command-line front end for the `bessrad` library: single-value
//! queries, zero listings, radius and bounds computations, reference
//! grid reproduction, and the verification suites, with JSON, CSV, and
//! text output.
//!
//! Exit codes: 0 success, 2 validation error, 3 numeric failure,
//! 4 verification-suite failure.

use clap::{Parser, Subcommand, ValueEnum};

use bessrad::rayleigh::{auxiliary_sums, radius_bounds, zero_power_sum, AuxFamily, BoundsTarget};
use bessrad::zeros::{find_zeros, ZeroFamily};
use bessrad::{
    convex_radius, eval_normalized, starlike_radius, Branch, Error, Kind, Order, Params,
    Property, TruncationPolicy,
};

pub mod json;
pub mod output;
pub mod tables;
pub mod verify;

use json::{fmt_g12, Json};
use output::{csv_row, Envelope, ErrorObj, Format, Outcome};

/// Radii of starlikeness and convexity for normalized Bessel derivatives.
#[derive(Parser, Debug)]
#[command(
    name = "bessrad",
    version,
    about = "Radii of starlikeness and convexity for normalized nth derivatives \
             of Bessel functions of the first kind",
    long_about = "Computes radii of starlikeness and convexity of order beta for the \
                  three normalizations (f, g, h) of the nth derivative of the Bessel \
                  function of the first kind, along with zeros, closed-form reciprocal \
                  zero sums, radius bounds, reference grids, and a verification suite.\n\n\
                  Quantities for the h normalization live in h's own squared variable \
                  Z = z^2; `radius --z-variable` converts an h radius to the z plane."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Override the relative series truncation tolerance.
    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,
    /// Override the cap on series terms.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a normalization at a point (kind h takes Z = z^2).
    Eval {
        /// Evaluation point, > 0.
        point: f64,
        /// Which normalization.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Order of the Bessel function.
        #[arg(long)]
        nu: f64,
        /// Derivative order.
        #[arg(long, default_value_t = 0)]
        n: u32,
    },
    /// List the first zeros of a section family.
    Zeros {
        /// Zero family.
        family: FamilyArg,
        /// Order of the Bessel function.
        #[arg(long)]
        nu: f64,
        /// Derivative order.
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// How many zeros to compute.
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Radius of starlikeness or convexity of order beta.
    Radius {
        /// Which radius.
        property: PropertyArg,
        /// Which normalization.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Order of the Bessel function.
        #[arg(long)]
        nu: f64,
        /// Derivative order.
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Order of starlikeness/convexity, in [0, 1).
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        /// Report an h radius in the z variable (square root of the
        /// native squared-variable radius).
        #[arg(long)]
        z_variable: bool,
    },
    /// Sum-rule lower/upper bounds enclosing an order-zero radius.
    Bounds {
        /// Which radius the bounds enclose.
        target: TargetArg,
        /// Order of the Bessel function.
        #[arg(long)]
        nu: f64,
        /// Derivative order.
        #[arg(long, default_value_t = 0)]
        n: u32,
    },
    /// Closed-form reciprocal power sums over a zero family.
    Sums {
        /// Which sum.
        family: SumArg,
        /// Order of the Bessel function.
        #[arg(long)]
        nu: f64,
        /// Derivative order.
        #[arg(long, default_value_t = 0)]
        n: u32,
    },
    /// Reproduce a reference radius grid with per-cell deviations.
    Table {
        /// Which grid: 1 = starlikeness at nu 2.5, 2 = convexity at nu 3.5.
        which: u8,
    },
    /// Run the verification suites over a parameter grid.
    Verify {
        /// Comma-separated list of nu values (default 0.5,1.5,2.5,3.5).
        #[arg(long, value_delimiter = ',')]
        grid_nu: Option<Vec<f64>>,
        /// Restrict to a single nu.
        #[arg(long)]
        nu: Option<f64>,
        /// Restrict to a single derivative order n.
        #[arg(long)]
        n: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    F,
    G,
    H,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::F => Kind::F,
            KindArg::G => Kind::G,
            KindArg::H => Kind::H,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Starlike,
    Convex,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Property {
        match p {
            PropertyArg::Starlike => Property::Starlike,
            PropertyArg::Convex => Property::Convex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    JDeriv,
    GPrime,
    HPrime,
    GConvex,
    HConvex,
}

impl From<FamilyArg> for ZeroFamily {
    fn from(f: FamilyArg) -> ZeroFamily {
        match f {
            FamilyArg::JDeriv => ZeroFamily::JDeriv,
            FamilyArg::GPrime => ZeroFamily::GPrime,
            FamilyArg::HPrime => ZeroFamily::HPrime,
            FamilyArg::GConvex => ZeroFamily::Delta,
            FamilyArg::HConvex => ZeroFamily::Theta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    StarlikeG,
    StarlikeH,
    ConvexG,
    ConvexH,
}

impl From<TargetArg> for BoundsTarget {
    fn from(t: TargetArg) -> BoundsTarget {
        match t {
            TargetArg::StarlikeG => BoundsTarget::StarlikeG,
            TargetArg::StarlikeH => BoundsTarget::StarlikeH,
            TargetArg::ConvexG => BoundsTarget::ConvexG,
            TargetArg::ConvexH => BoundsTarget::ConvexH,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumArg {
    J2,
    J4,
    Sigma1,
    Sigma2,
    Rho1,
    Rho2,
    Kappa1,
    Kappa2,
    Omega1,
    Omega2,
}

/// Maps a library error to the exit code and error class of the CLI.
fn classify(e: &Error) -> (i32, &'static str) {
    match e {
        Error::Domain(_) | Error::LengthMismatch(_) => (2, "validation"),
        _ => (3, "numeric"),
    }
}

/// A failed request: canonical error envelope on stderr, nothing on
/// stdout.
fn failure(
    command: &'static str,
    nu: Option<f64>,
    n: Option<u32>,
    beta: Option<f64>,
    exit: i32,
    code: &'static str,
    message: String,
) -> Outcome {
    let mut env = Envelope::new(command);
    env.nu = nu;
    env.n = n;
    env.beta = beta;
    env.error = Some(ErrorObj { code, message });
    Outcome {
        exit,
        stdout: String::new(),
        stderr: env.to_json(),
    }
}

fn library_failure(
    command: &'static str,
    nu: Option<f64>,
    n: Option<u32>,
    beta: Option<f64>,
    e: &Error,
) -> Outcome {
    let (exit, code) = classify(e);
    failure(command, nu, n, beta, exit, code, e.to_string())
}

fn build_policy(rel_tol: Option<f64>, max_terms: Option<usize>) -> Result<TruncationPolicy, String> {
    let mut policy = TruncationPolicy::default();
    if let Some(r) = rel_tol {
        if !(r > 0.0 && r < 0.1) {
            return Err(format!("--rel-tol must lie in (0, 0.1), got {r}"));
        }
        policy.rel_tol = r;
    }
    if let Some(m) = max_terms {
        if m < 4 {
            return Err(format!("--max-terms must be at least 4, got {m}"));
        }
        policy.max_terms = m;
    }
    Ok(policy)
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Eval { .. } => "eval",
        Command::Zeros { .. } => "zeros",
        Command::Radius { .. } => "radius",
        Command::Bounds { .. } => "bounds",
        Command::Sums { .. } => "sums",
        Command::Table { .. } => "table",
        Command::Verify { .. } => "verify",
    }
}

/// Executes a parsed invocation.
pub fn run(cli: Cli) -> Outcome {
    let policy = match build_policy(cli.rel_tol, cli.max_terms) {
        Ok(p) => p,
        Err(msg) => {
            return failure(command_name(&cli.command), None, None, None, 2, "validation", msg)
        }
    };
    match cli.command {
        Command::Eval { point, kind, nu, n } => run_eval(cli.format, &policy, point, kind, nu, n),
        Command::Zeros {
            family,
            nu,
            n,
            count,
        } => run_zeros(cli.format, &policy, family, nu, n, count),
        Command::Radius {
            property,
            kind,
            nu,
            n,
            beta,
            z_variable,
        } => run_radius(cli.format, &policy, property, kind, nu, n, beta, z_variable),
        Command::Bounds { target, nu, n } => run_bounds(cli.format, target, nu, n),
        Command::Sums { family, nu, n } => run_sums(cli.format, family, nu, n),
        Command::Table { which } => run_table(cli.format, &policy, which),
        Command::Verify { grid_nu, nu, n } => run_verify(cli.format, &policy, grid_nu, nu, n),
    }
}

fn run_eval(
    format: Format,
    policy: &TruncationPolicy,
    point: f64,
    kind: KindArg,
    nu: f64,
    n: u32,
) -> Outcome {
    let order = match Order::new(nu, n) {
        Ok(o) => o,
        Err(e) => return library_failure("eval", Some(nu), Some(n), None, &e),
    };
    let lib_kind: Kind = kind.into();
    let value = match eval_normalized(lib_kind, &order, point, policy) {
        Ok(v) => v,
        Err(e) => return library_failure("eval", Some(nu), Some(n), None, &e),
    };
    let mut env = Envelope::new("eval");
    env.nu = Some(nu);
    env.n = Some(n);
    env.result = Json::Num(value);
    if lib_kind == Kind::H {
        env.warnings
            .push("the evaluation point for kind h is in h's own squared variable Z = z^2".into());
    }
    let body = match format {
        Format::Json => env.to_json(),
        Format::Csv => {
            let mut s = csv_row(&to_strings(&["command", "kind", "nu", "n", "point", "value"]));
            s.push_str(&csv_row(&[
                "eval".into(),
                lib_kind.name().into(),
                fmt_g12(nu),
                n.to_string(),
                fmt_g12(point),
                fmt_g12(value),
            ]));
            s
        }
        Format::Text => {
            let mut s = format!(
                "{}(nu {}, n {n}) at {} = {}\n",
                lib_kind.name(),
                fmt_g12(nu),
                fmt_g12(point),
                fmt_g12(value)
            );
            push_warning_lines(&mut s, &env.warnings);
            s
        }
    };
    Outcome::success(body)
}

fn run_zeros(
    format: Format,
    policy: &TruncationPolicy,
    family: FamilyArg,
    nu: f64,
    n: u32,
    count: usize,
) -> Outcome {
    let lib_family: ZeroFamily = family.into();
    let seq = match Order::new(nu, n)
        .and_then(|order| find_zeros(lib_family, &order, count, policy))
    {
        Ok(s) => s,
        Err(e) => return library_failure("zeros", Some(nu), Some(n), None, &e),
    };
    let mut env = Envelope::new("zeros");
    env.nu = Some(nu);
    env.n = Some(n);
    env.result = Json::Arr(seq.zeros.iter().map(|&z| Json::Num(z)).collect());
    if lib_family.squared_variable() {
        env.warnings.push(format!(
            "{} zeros are reported in the squared variable Z = z^2",
            lib_family.name()
        ));
    }
    let body = match format {
        Format::Json => env.to_json(),
        Format::Csv => {
            let mut s = csv_row(&to_strings(&["command", "family", "nu", "n", "index", "zero"]));
            for (i, &z) in seq.zeros.iter().enumerate() {
                s.push_str(&csv_row(&[
                    "zeros".into(),
                    lib_family.name().into(),
                    fmt_g12(nu),
                    n.to_string(),
                    (i + 1).to_string(),
                    fmt_g12(z),
                ]));
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "first {} zeros of {} (nu {}, n {n}):\n",
                seq.zeros.len(),
                lib_family.name(),
                fmt_g12(nu)
            );
            for (i, &z) in seq.zeros.iter().enumerate() {
                s.push_str(&format!("  {:>3}: {}\n", i + 1, fmt_g12(z)));
            }
            push_warning_lines(&mut s, &env.warnings);
            s
        }
    };
    Outcome::success(body)
}

#[allow(clippy::too_many_arguments)]
fn run_radius(
    format: Format,
    policy: &TruncationPolicy,
    property: PropertyArg,
    kind: KindArg,
    nu: f64,
    n: u32,
    beta: f64,
    z_variable: bool,
) -> Outcome {
    let lib_kind: Kind = kind.into();
    let lib_property: Property = property.into();
    let result = Order::new(nu, n)
        .and_then(|order| Params::new(order, beta))
        .and_then(|params| match lib_property {
            Property::Starlike => starlike_radius(lib_kind, &params, policy),
            Property::Convex => convex_radius(lib_kind, &params, policy),
        });
    let r = match result {
        Ok(r) => r,
        Err(e) => return library_failure("radius", Some(nu), Some(n), Some(beta), &e),
    };
    let mut env = Envelope::new("radius");
    env.nu = Some(nu);
    env.n = Some(n);
    env.beta = Some(beta);

    let (mut radius, mut bracket, mut residual) = (r.radius, r.bracket, r.residual);
    if lib_kind == Kind::H {
        if z_variable {
            // d sqrt(Z) = dZ / (2 sqrt(Z)): rescale the certificate too.
            let root = radius.sqrt();
            residual /= 2.0 * root;
            radius = root;
            bracket = (bracket.0.sqrt(), bracket.1.sqrt());
            env.warnings
                .push("h radius converted to the z variable (square root applied)".into());
        } else {
            env.warnings.push(
                "h radii are native to the squared variable Z = z^2; pass --z-variable \
                 for the z-plane disk radius"
                    .into(),
            );
        }
    } else if z_variable {
        env.warnings
            .push("--z-variable only affects kind h; flag ignored".into());
    }
    if r.branch == Branch::Modified {
        env.warnings.push(
            "strip regime n - 1 < nu < n: radius solves the modified-kernel equation".into(),
        );
    }
    env.result = Json::Num(radius);
    env.bracket = Some(bracket);
    env.residual = Some(residual);

    let branch_name = match r.branch {
        Branch::Principal => "principal",
        Branch::Modified => "modified",
    };
    let body = match format {
        Format::Json => env.to_json(),
        Format::Csv => {
            let mut s = csv_row(&to_strings(&[
                "command",
                "property",
                "kind",
                "nu",
                "n",
                "beta",
                "radius",
                "bracket_lo",
                "bracket_hi",
                "residual",
                "branch",
            ]));
            s.push_str(&csv_row(&[
                "radius".into(),
                lib_property.name().into(),
                lib_kind.name().into(),
                fmt_g12(nu),
                n.to_string(),
                fmt_g12(beta),
                fmt_g12(radius),
                fmt_g12(bracket.0),
                fmt_g12(bracket.1),
                fmt_g12(residual),
                branch_name.into(),
            ]));
            s
        }
        Format::Text => {
            let mut s = format!(
                "{} radius of {} (nu {}, n {n}, beta {}): {}\n",
                lib_property.name(),
                lib_kind.name(),
                fmt_g12(nu),
                fmt_g12(beta),
                fmt_g12(radius)
            );
            s.push_str(&format!(
                "  bracket [{}, {}], residual {}, {branch_name} branch\n",
                fmt_g12(bracket.0),
                fmt_g12(bracket.1),
                fmt_g12(residual)
            ));
            push_warning_lines(&mut s, &env.warnings);
            s
        }
    };
    Outcome::success(body)
}

fn run_bounds(format: Format, target: TargetArg, nu: f64, n: u32) -> Outcome {
    let lib_target: BoundsTarget = target.into();
    let bounds = match Order::new(nu, n).and_then(|order| radius_bounds(lib_target, &order)) {
        Ok(b) => b,
        Err(e) => return library_failure("bounds", Some(nu), Some(n), None, &e),
    };
    let mut env = Envelope::new("bounds");
    env.nu = Some(nu);
    env.n = Some(n);
    env.result = Json::Obj(vec![
        ("lower", Json::Num(bounds.lower)),
        ("upper", Json::Num(bounds.upper)),
        ("extra_upper", Json::opt_num(bounds.extra_upper)),
    ]);
    let body = match format {
        Format::Json => env.to_json(),
        Format::Csv => {
            let mut s = csv_row(&to_strings(&[
                "command",
                "target",
                "nu",
                "n",
                "lower",
                "upper",
                "extra_upper",
            ]));
            s.push_str(&csv_row(&[
                "bounds".into(),
                lib_target.name().into(),
                fmt_g12(nu),
                n.to_string(),
                fmt_g12(bounds.lower),
                fmt_g12(bounds.upper),
                bounds.extra_upper.map(fmt_g12).unwrap_or_default(),
            ]));
            s
        }
        Format::Text => {
            let mut s = format!(
                "bounds for the {} radius (nu {}, n {n}): ({}, {})\n",
                lib_target.name(),
                fmt_g12(nu),
                fmt_g12(bounds.lower),
                fmt_g12(bounds.upper)
            );
            if let Some(extra) = bounds.extra_upper {
                s.push_str(&format!("  additional upper bound: {}\n", fmt_g12(extra)));
            }
            s
        }
    };
    Outcome::success(body)
}

fn run_sums(format: Format, family: SumArg, nu: f64, n: u32) -> Outcome {
    let order = match Order::new(nu, n) {
        Ok(o) => o,
        Err(e) => return library_failure("sums", Some(nu), Some(n), None, &e),
    };
    let value = match sum_value(family, &order) {
        Ok(v) => v,
        Err(e) => return library_failure("sums", Some(nu), Some(n), None, &e),
    };
    let name = sum_name(family);
    let mut env = Envelope::new("sums");
    env.nu = Some(nu);
    env.n = Some(n);
    env.result = Json::Num(value);
    let body = match format {
        Format::Json => env.to_json(),
        Format::Csv => {
            let mut s = csv_row(&to_strings(&["command", "family", "nu", "n", "value"]));
            s.push_str(&csv_row(&[
                "sums".into(),
                name.into(),
                fmt_g12(nu),
                n.to_string(),
                fmt_g12(value),
            ]));
            s
        }
        Format::Text => format!("{name}(nu {}, n {n}) = {}\n", fmt_g12(nu), fmt_g12(value)),
    };
    Outcome::success(body)
}

fn sum_value(family: SumArg, order: &Order) -> bessrad::Result<f64> {
    let aux = |f: AuxFamily, second: bool| {
        auxiliary_sums(f, order).map(|p| if second { p.1.value } else { p.0.value })
    };
    match family {
        SumArg::J2 => zero_power_sum(order, 2).map(|s| s.value),
        SumArg::J4 => zero_power_sum(order, 4).map(|s| s.value),
        SumArg::Sigma1 => aux(AuxFamily::Sigma, false),
        SumArg::Sigma2 => aux(AuxFamily::Sigma, true),
        SumArg::Rho1 => aux(AuxFamily::Rho, false),
        SumArg::Rho2 => aux(AuxFamily::Rho, true),
        SumArg::Kappa1 => aux(AuxFamily::Kappa, false),
        SumArg::Kappa2 => aux(AuxFamily::Kappa, true),
        SumArg::Omega1 => aux(AuxFamily::Omega, false),
        SumArg::Omega2 => aux(AuxFamily::Omega, true),
    }
}

fn sum_name(family: SumArg) -> &'static str {
    match family {
        SumArg::J2 => "j2",
        SumArg::J4 => "j4",
        SumArg::Sigma1 => "sigma1",
        SumArg::Sigma2 => "sigma2",
        SumArg::Rho1 => "rho1",
        SumArg::Rho2 => "rho2",
        SumArg::Kappa1 => "kappa1",
        SumArg::Kappa2 => "kappa2",
        SumArg::Omega1 => "omega1",
        SumArg::Omega2 => "omega2",
    }
}

fn run_table(format: Format, policy: &TruncationPolicy, which: u8) -> Outcome {
    let spec = match tables::spec_for(which) {
        Some(s) => s,
        None => {
            return failure(
                "table",
                None,
                None,
                None,
                2,
                "validation",
                format!("table must be 1 or 2, got {which}"),
            )
        }
    };
    let (cells, warnings, any_error) = tables::run_table(spec, policy);
    let mut env = Envelope::new("table");
    env.nu = Some(spec.nu);
    env.warnings = warnings;
    env.result = Json::Arr(
        cells
            .iter()
            .map(|c| {
                Json::Obj(vec![
                    ("kind", Json::Str(c.kind.name().to_string())),
                    ("n", Json::Int(c.n as i64)),
                    ("beta", Json::Num(c.beta)),
                    ("computed", Json::opt_num(c.computed)),
                    ("reference", Json::Num(c.reference)),
                    ("deviation", Json::opt_num(c.deviation)),
                    ("anomaly", Json::Bool(c.anomaly)),
                    (
                        "note",
                        match &c.note {
                            Some(s) => Json::Str(s.clone()),
                            None => Json::Null,
                        },
                    ),
                ])
            })
            .collect(),
    );
    let exit = if any_error { 3 } else { 0 };
    let body = match format {
        Format::Json => env.to_json(),
        Format::Csv => {
            let mut s = csv_row(&to_strings(&[
                "command",
                "which",
                "kind",
                "n",
                "beta",
                "computed",
                "reference",
                "deviation",
                "anomaly",
                "note",
            ]));
            for c in &cells {
                s.push_str(&csv_row(&[
                    "table".into(),
                    which.to_string(),
                    c.kind.name().into(),
                    c.n.to_string(),
                    fmt_g12(c.beta),
                    c.computed.map(fmt_g12).unwrap_or_default(),
                    fmt_g12(c.reference),
                    c.deviation.map(fmt_g12).unwrap_or_default(),
                    c.anomaly.to_string(),
                    c.note.clone().unwrap_or_default(),
                ]));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{}\n", spec.title);
            s.push_str(
                "computed and reference values at 4 decimals; * marks a flagged \
                 reference anomaly\n\n",
            );
            s.push_str("kind  n  beta   computed  reference  |deviation|\n");
            for c in &cells {
                let computed = match c.computed {
                    Some(v) => format!("{v:.4}{}", if c.anomaly { "*" } else { " " }),
                    None => "failed".to_string(),
                };
                let deviation = match c.deviation {
                    Some(d) => format!("{d:.1e}"),
                    None => "-".to_string(),
                };
                s.push_str(&format!(
                    "{:>4} {:>2}  {:<4} {:>9} {:>10}  {:>10}\n",
                    c.kind.name(),
                    c.n,
                    fmt_g12(c.beta),
                    computed,
                    format!("{:.4}", c.reference),
                    deviation
                ));
            }
            push_warning_lines(&mut s, &env.warnings);
            s
        }
    };
    Outcome {
        exit,
        stdout: body,
        stderr: String::new(),
    }
}

fn run_verify(
    format: Format,
    policy: &TruncationPolicy,
    grid_nu: Option<Vec<f64>>,
    nu: Option<f64>,
    n: Option<u32>,
) -> Outcome {
    let both_given = nu.is_some() && grid_nu.is_some();
    let config = match verify::build_config(grid_nu, nu, n) {
        Ok(c) => c,
        Err(msg) => return failure("verify", nu, n, None, 2, "validation", msg),
    };
    let reports = verify::run_all(&config, policy);
    let all_passed = reports.iter().all(|r| r.passed());
    let total_checks: usize = reports.iter().map(|r| r.checks).sum();
    let total_failures: usize = reports.iter().map(|r| r.failures).sum();

    let mut env = Envelope::new("verify");
    env.nu = nu;
    env.n = n;
    if both_given {
        env.warnings
            .push("--nu overrides --grid-nu for this run".into());
    }
    for report in &reports {
        for detail in &report.details {
            env.warnings.push(format!("{}: {}", report.name, detail));
        }
    }
    env.result = Json::Arr(
        reports
            .iter()
            .map(|r| {
                Json::Obj(vec![
                    ("suite", Json::Str(r.name.to_string())),
                    ("checks", Json::Int(r.checks as i64)),
                    ("failures", Json::Int(r.failures as i64)),
                    (
                        "status",
                        Json::Str(if r.passed() { "pass" } else { "fail" }.to_string()),
                    ),
                ])
            })
            .collect(),
    );
    let exit = if all_passed { 0 } else { 4 };
    let body = match format {
        Format::Json => env.to_json(),
        Format::Csv => {
            let mut s = csv_row(&to_strings(&["command", "suite", "checks", "failures", "status"]));
            for r in &reports {
                s.push_str(&csv_row(&[
                    "verify".into(),
                    r.name.into(),
                    r.checks.to_string(),
                    r.failures.to_string(),
                    if r.passed() { "pass" } else { "fail" }.into(),
                ]));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format!(
                    "{:<22} {}  ({} checks)\n",
                    r.name,
                    if r.passed() { "pass" } else { "FAIL" },
                    r.checks
                ));
                for detail in &r.details {
                    s.push_str(&format!("    {detail}\n"));
                }
            }
            if all_passed {
                s.push_str(&format!(
                    "all {} suites passed ({total_checks} checks)\n",
                    reports.len()
                ));
            } else {
                s.push_str(&format!(
                    "verification FAILED: {total_failures} of {total_checks} checks failed\n"
                ));
            }
            s
        }
    };
    Outcome {
        exit,
        stdout: body,
        stderr: String::new(),
    }
}

fn to_strings(fields: &[&str]) -> Vec<String> {
    fields.iter().map(|s| s.to_string()).collect()
}

fn push_warning_lines(s: &mut String, warnings: &[String]) {
    for w in warnings {
        s.push_str(&format!("  note: {w}\n"));
    }
}
