// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The two frozen radius grids: computed values side by side with the
//! four-decimal reference values and per-cell absolute deviations.

use bessrad::{convex_radius, starlike_radius, Kind, Order, Params, Property, TruncationPolicy};

/// Specification of one reference grid.
pub struct TableSpec {
    pub which: u8,
    pub title: &'static str,
    pub nu: f64,
    pub property: Property,
    /// `reference[kind][n][beta]`, kinds ordered f, g, h; beta 0 and 1/2.
    pub reference: [[[f64; 2]; 4]; 3],
    /// `(kind, n, beta)` indices of a cell whose reference value is known
    /// to be inconsistent (it violates the grid's own monotonicity in
    /// beta and the independent sum-rule enclosure of the radius); the
    /// cell is flagged in the output rather than treated as ground truth.
    pub anomaly: Option<(usize, usize, usize)>,
}

const KINDS: [Kind; 3] = [Kind::F, Kind::G, Kind::H];

/// Radii of starlikeness at `nu = 2.5`.
pub const STARLIKE_TABLE: TableSpec = TableSpec {
    which: 1,
    title: "radii of starlikeness at nu = 2.5",
    nu: 2.5,
    property: Property::Starlike,
    reference: [
        [
            [3.6328, 2.7569],
            [2.1056, 1.5926],
            [0.8512, 0.6229],
            [0.4586, 0.3051],
        ],
        [
            [2.5011, 1.8192],
            [1.7975, 1.3307],
            [1.1285, 0.8512],
            [0.4819, 0.3703],
        ],
        [
            [11.1696, 6.2556],
            [5.4265, 3.2312],
            [2.0284, 1.2735],
            [0.3543, 0.2323],
        ],
    ],
    anomaly: None,
};

/// Radii of convexity at `nu = 3.5`.
// The frozen four-decimal reference cell 2.7183 happens to round `e`;
// it is tabulated data, not a math constant.
#[allow(clippy::approx_constant)]
pub const CONVEX_TABLE: TableSpec = TableSpec {
    which: 2,
    title: "radii of convexity at nu = 3.5",
    nu: 3.5,
    property: Property::Convex,
    reference: [
        [
            [2.7183, 2.0865],
            [1.8179, 1.3998],
            [1.0592, 0.8123],
            [0.4141, 0.3131],
        ],
        [
            [0.5234, 1.1461],
            [1.2017, 0.9084],
            [0.8833, 0.6715],
            [0.5683, 0.4350],
        ],
        [
            [6.2189, 3.7194],
            [3.7394, 2.2873],
            [1.9450, 1.2190],
            [0.7726, 0.4968],
        ],
    ],
    anomaly: Some((1, 0, 0)),
};

pub fn spec_for(which: u8) -> Option<&'static TableSpec> {
    match which {
        1 => Some(&STARLIKE_TABLE),
        2 => Some(&CONVEX_TABLE),
        _ => None,
    }
}

/// One computed grid cell.
pub struct Cell {
    pub kind: Kind,
    pub n: u32,
    pub beta: f64,
    pub computed: Option<f64>,
    pub reference: f64,
    pub deviation: Option<f64>,
    pub anomaly: bool,
    pub note: Option<String>,
}

/// Computes the full grid, cells ordered by row (`n`) then column
/// (kind-major, beta-minor). Per-cell failures are recorded in the cell
/// and as warnings without aborting the rest of the grid.
pub fn run_table(
    spec: &TableSpec,
    policy: &TruncationPolicy,
) -> (Vec<Cell>, Vec<String>, bool) {
    let mut cells = Vec::with_capacity(24);
    let mut warnings = Vec::new();
    let mut any_error = false;
    for n in 0..4u32 {
        for (k, &kind) in KINDS.iter().enumerate() {
            for (b, &beta) in [0.0f64, 0.5].iter().enumerate() {
                let reference = spec.reference[k][n as usize][b];
                let anomaly = spec.anomaly == Some((k, n as usize, b));
                let outcome = Order::new(spec.nu, n)
                    .and_then(|order| Params::new(order, beta))
                    .and_then(|params| match spec.property {
                        Property::Starlike => starlike_radius(kind, &params, policy),
                        Property::Convex => convex_radius(kind, &params, policy),
                    });
                let (computed, deviation, note) = match outcome {
                    Ok(r) => {
                        let dev = (r.radius - reference).abs();
                        let note = anomaly.then(|| {
                            "reference entry is inconsistent (violates beta-monotonicity \
                             and the sum-rule enclosure); computed value reported"
                                .to_string()
                        });
                        (Some(r.radius), Some(dev), note)
                    }
                    Err(e) => {
                        any_error = true;
                        warnings.push(format!(
                            "cell ({}, n={n}, beta={beta}): {e}",
                            kind.name()
                        ));
                        (None, None, Some(e.to_string()))
                    }
                };
                if anomaly {
                    if let (Some(c), Some(d)) = (computed, deviation) {
                        warnings.push(format!(
                            "cell ({}, n={n}, beta={beta}) flagged: computed {c:.4} vs \
                             reference {reference} (|deviation| {d:.4})",
                            kind.name()
                        ));
                    }
                }
                cells.push(Cell {
                    kind,
                    n,
                    beta,
                    computed,
                    reference,
                    deviation,
                    anomaly,
                    note,
                });
            }
        }
    }
    (cells, warnings, any_error)
}
