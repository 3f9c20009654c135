// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Output assembly: the fixed JSON envelope, RFC-4180 CSV helpers, and
//! the process outcome type.

use clap::ValueEnum;

use crate::json::Json;

/// Output representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// What the process prints and how it exits.
#[derive(Debug)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn success(stdout: String) -> Outcome {
        Outcome {
            exit: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Machine-readable error attached to a failed request.
#[derive(Debug, Clone)]
pub struct ErrorObj {
    /// Stable error class: `validation`, `numeric`, or `verification`.
    pub code: &'static str,
    pub message: String,
}

/// The fixed response envelope. JSON output always carries the six keys
/// `command`, `params` (with `nu`, `n`, `beta`), `result`, `bracket`,
/// `residual`, `warnings` in that order, with `null` for inapplicable
/// slots; a failure appends an `error` object last.
#[derive(Debug)]
pub struct Envelope {
    pub command: &'static str,
    pub nu: Option<f64>,
    pub n: Option<u32>,
    pub beta: Option<f64>,
    pub result: Json,
    pub bracket: Option<(f64, f64)>,
    pub residual: Option<f64>,
    pub warnings: Vec<String>,
    pub error: Option<ErrorObj>,
}

impl Envelope {
    pub fn new(command: &'static str) -> Envelope {
        Envelope {
            command,
            nu: None,
            n: None,
            beta: None,
            result: Json::Null,
            bracket: None,
            residual: None,
            warnings: Vec::new(),
            error: None,
        }
    }

    /// Canonical JSON rendering, newline-terminated.
    pub fn to_json(&self) -> String {
        let params = Json::Obj(vec![
            ("nu", Json::opt_num(self.nu)),
            (
                "n",
                match self.n {
                    Some(v) => Json::Int(v as i64),
                    None => Json::Null,
                },
            ),
            ("beta", Json::opt_num(self.beta)),
        ]);
        let mut fields = vec![
            ("command", Json::Str(self.command.to_string())),
            ("params", params),
            ("result", self.result.clone()),
            (
                "bracket",
                match self.bracket {
                    Some((lo, hi)) => Json::Arr(vec![Json::Num(lo), Json::Num(hi)]),
                    None => Json::Null,
                },
            ),
            ("residual", Json::opt_num(self.residual)),
            (
                "warnings",
                Json::Arr(
                    self.warnings
                        .iter()
                        .map(|w| Json::Str(w.clone()))
                        .collect(),
                ),
            ),
        ];
        if let Some(e) = &self.error {
            fields.push((
                "error",
                Json::Obj(vec![
                    ("code", Json::Str(e.code.to_string())),
                    ("message", Json::Str(e.message.clone())),
                ]),
            ));
        }
        let mut out = Json::Obj(fields).emit();
        out.push('\n');
        out
    }
}

/// Quotes a CSV field per RFC 4180: quoted only when it contains a comma,
/// quote, or line break, with embedded quotes doubled.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV record, newline-terminated.
pub fn csv_row(fields: &[String]) -> String {
    let mut out = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    out
}
