// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Minimal canonical JSON emission: insertion-ordered object keys and a
//! fixed 12-significant-digit float format, so that emitting, parsing,
//! and re-emitting a document is byte-identical.

/// A JSON value with ordered object keys.
#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    /// Integers render without a decimal point or exponent.
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    /// `Num` when present, `Null` otherwise.
    pub fn opt_num(x: Option<f64>) -> Json {
        match x {
            Some(v) => Json::Num(v),
            None => Json::Null,
        }
    }

    /// Renders the value as compact canonical JSON.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        self.render(&mut out);
        out
    }

    fn render(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Num(x) => out.push_str(&fmt_g12(*x)),
            Json::Str(s) => out.push_str(&escape(s)),
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.render(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&escape(key));
                    out.push(':');
                    value.render(out);
                }
                out.push('}');
            }
        }
    }
}

/// Escapes a string as a JSON string literal (with quotes).
pub fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Formats a float with 12 significant digits: scientific notation
/// exactly when the decimal exponent is below -4 or at least 12, trailing
/// zeros stripped. Deterministic, so re-formatting the parsed value
/// reproduces the same bytes.
pub fn fmt_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        // JSON cannot carry non-finite numbers; callers report these as
        // errors before formatting ever sees them.
        return "null".to_string();
    }
    let neg = x < 0.0;
    let sci = format!("{:.11e}", x.abs());
    let (mantissa, exp_str) = sci.split_once('e').expect("scientific float form");
    let mut exp: i32 = exp_str.parse().expect("float exponent");
    let mut digits: Vec<u8> = mantissa.bytes().filter(|b| *b != b'.').collect();
    // A rounding carry can yield a 13-digit mantissa 1000...0; renormalize.
    if digits.len() == 13 {
        digits.truncate(12);
        exp += 1;
    }
    debug_assert_eq!(digits.len(), 12);
    let digits = std::str::from_utf8(&digits).expect("ascii digits");

    let body = if !(-4..12).contains(&exp) {
        let frac = digits[1..].trim_end_matches('0');
        if frac.is_empty() {
            format!("{}e{exp}", &digits[..1])
        } else {
            format!("{}.{frac}e{exp}", &digits[..1])
        }
    } else if exp < 0 {
        let frac = digits.trim_end_matches('0');
        format!("0.{}{frac}", "0".repeat((-exp - 1) as usize))
    } else {
        let split = exp as usize + 1;
        let frac = digits[split..].trim_end_matches('0');
        if frac.is_empty() {
            digits[..split].to_string()
        } else {
            format!("{}.{frac}", &digits[..split])
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_twelve_significant_digits() {
        assert_eq!(fmt_g12(0.0), "0");
        assert_eq!(fmt_g12(-0.0), "0");
        assert_eq!(fmt_g12(1.0), "1");
        assert_eq!(fmt_g12(-2.5), "-2.5");
        assert_eq!(fmt_g12(0.1), "0.1");
        assert_eq!(fmt_g12(11.1696), "11.1696");
        assert_eq!(fmt_g12(1e-4), "0.0001");
        assert_eq!(fmt_g12(1e-5), "1e-5");
        assert_eq!(fmt_g12(3.2e-14), "3.2e-14");
        assert_eq!(fmt_g12(1e11), "100000000000");
        assert_eq!(fmt_g12(1e12), "1e12");
        assert_eq!(fmt_g12(123456789012.0), "123456789012");
        // 13 significant digits round to 12.
        assert_eq!(fmt_g12(1.234567890123), "1.23456789012");
        // Rounding carry renormalizes the exponent.
        assert_eq!(fmt_g12(999999999999.99), "1e12");
        assert_eq!(fmt_g12(0.99999999999999), "1");
    }

    #[test]
    fn reformatting_parsed_output_is_identity() {
        for &x in &[
            1.7975344888,
            3.241592653589793e-14,
            2.404825557695773,
            1.0 / 3.0,
            6.02e23,
            -7.25e-9,
        ] {
            let once = fmt_g12(x);
            let parsed: f64 = once.parse().unwrap();
            assert_eq!(fmt_g12(parsed), once, "not idempotent for {x}");
        }
    }

    #[test]
    fn emits_ordered_objects_and_escapes() {
        let doc = Json::Obj(vec![
            ("b", Json::Int(3)),
            ("a", Json::Arr(vec![Json::Num(0.5), Json::Null, Json::Bool(true)])),
            ("s", Json::Str("say \"hi\"\n".to_string())),
        ]);
        assert_eq!(
            doc.emit(),
            r#"{"b":3,"a":[0.5,null,true],"s":"say \"hi\"\n"}"#
        );
    }
}
