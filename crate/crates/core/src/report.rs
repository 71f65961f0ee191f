//! Report rendering shared by the JSON and CSV writers.
//!
//! Floating-point values are written with 17 significant digits so that a
//! report pins down every bit of the `f64` it came from.

use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::verify::VerificationReport;
use crate::weighting::Weighting;

/// Version tag carried by every JSON object this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

/// `v` in scientific notation with 17 significant digits and a signed
/// exponent (`1.0000000000000000e+0`, `6.2500000000000000e-2`).
pub fn fmt_sig17(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{v:.16e}");
    match s.split_once('e') {
        Some((mant, exp)) if !exp.starts_with('-') => format!("{mant}e+{exp}"),
        _ => s,
    }
}

fn number(v: f64) -> Option<serde_json::Number> {
    v.is_finite()
        .then(|| serde_json::Number::from_str(&fmt_sig17(v)).expect("valid JSON number"))
}

pub fn sig17<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    match number(*v) {
        Some(num) => s.serialize_some(&num),
        None => s.serialize_none(),
    }
}

pub fn sig17_weighting<S: Serializer>(w: &Weighting, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(w.len()))?;
    for &v in w.as_slice() {
        seq.serialize_element(&number(v))?;
    }
    seq.end()
}

pub const CSV_HEADER: &str = "t,m,a,colex_value,max_value,gap,graph_count,all_pass";

pub fn csv_row(r: &VerificationReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.t,
        r.m,
        r.a.map(|a| a.to_string()).unwrap_or_default(),
        fmt_sig17(r.colex_value),
        fmt_sig17(r.max_value),
        fmt_sig17(r.gap),
        r.graph_count,
        r.all_pass
    )
}

/// CSV summary with a header line, one row per report.
pub fn csv_summary(reports: &[VerificationReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

/// One compact JSON object per line.
pub fn json_lines<T: serde::Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("reports serialize"));
        out.push('\n');
    }
    out
}
