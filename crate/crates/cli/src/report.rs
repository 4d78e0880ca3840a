//! Report emitters: text table, CSV and JSON.
//!
//! CSV and JSON write every float at 17 significant digits in one shared
//! text form, so both formats carry the identical, round-trip exact value.

use std::io::Write;

use anyhow::Result;
use gmo_core::harness::{Summary, VerificationRecord};
use gmo_core::quad::QuadConfig;
use serde::Serialize;

pub const CSV_HEADER: [&str; 14] = [
    "case_id", "params", "lhs_re", "lhs_im", "lhs_err_est", "rhs_re", "rhs_im", "abs_diff",
    "rel_diff", "tol", "status", "n_evals", "wall_ms", "note",
];

/// 17 significant digits with a signed exponent (`1.0000000000000000e+0`),
/// the form JSON numbers keep verbatim. Non-finite values are NaN / inf / -inf.
pub fn float17(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        let s = format!("{x:.16e}");
        match s.split_once('e') {
            Some((m, e)) if !e.starts_with('-') => format!("{m}e+{e}"),
            _ => s,
        }
    }
}

fn json_number(x: f64) -> Option<serde_json::Number> {
    if !x.is_finite() {
        return None;
    }
    // arbitrary_precision keeps the 17-digit text verbatim
    serde_json::from_str(&float17(x)).ok()
}

fn csv_row(r: &VerificationRecord) -> [String; 14] {
    [
        r.id.name().to_string(),
        r.params.to_string(),
        float17(r.lhs.re),
        float17(r.lhs.im),
        float17(r.lhs_err_est),
        float17(r.rhs.re),
        float17(r.rhs.im),
        float17(r.abs_diff),
        float17(r.rel_diff),
        float17(r.tol),
        r.status.as_str().to_string(),
        r.n_evals.to_string(),
        format!("{:.3}", r.wall_ms),
        r.note.clone(),
    ]
}

pub fn write_csv<W: Write>(out: W, records: &[VerificationRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(csv_row(r))?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonConfig {
    abs_tol: Option<serde_json::Number>,
    rel_tol: Option<serde_json::Number>,
    max_evals: usize,
    max_depth: usize,
}

#[derive(Serialize)]
struct JsonRecord {
    case_id: String,
    params: String,
    lhs_re: Option<serde_json::Number>,
    lhs_im: Option<serde_json::Number>,
    lhs_err_est: Option<serde_json::Number>,
    rhs_re: Option<serde_json::Number>,
    rhs_im: Option<serde_json::Number>,
    abs_diff: Option<serde_json::Number>,
    rel_diff: Option<serde_json::Number>,
    tol: Option<serde_json::Number>,
    status: String,
    n_evals: usize,
    wall_ms: Option<serde_json::Number>,
    note: String,
}

#[derive(Serialize)]
struct ReportDocument {
    tool_version: String,
    timestamp: String,
    config: JsonConfig,
    records: Vec<JsonRecord>,
}

pub fn write_json<W: Write>(
    mut out: W,
    records: &[VerificationRecord],
    cfg: &QuadConfig,
) -> Result<()> {
    let doc = ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        config: JsonConfig {
            abs_tol: json_number(cfg.abs_tol),
            rel_tol: json_number(cfg.rel_tol),
            max_evals: cfg.max_evals,
            max_depth: cfg.max_depth,
        },
        records: records
            .iter()
            .map(|r| JsonRecord {
                case_id: r.id.name().to_string(),
                params: r.params.to_string(),
                lhs_re: json_number(r.lhs.re),
                lhs_im: json_number(r.lhs.im),
                lhs_err_est: json_number(r.lhs_err_est),
                rhs_re: json_number(r.rhs.re),
                rhs_im: json_number(r.rhs.im),
                abs_diff: json_number(r.abs_diff),
                rel_diff: json_number(r.rel_diff),
                tol: json_number(r.tol),
                status: r.status.as_str().to_string(),
                n_evals: r.n_evals,
                wall_ms: json_number(r.wall_ms),
                note: r.note.clone(),
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_table<W: Write>(mut out: W, records: &[VerificationRecord]) -> Result<()> {
    let params_width = records
        .iter()
        .map(|r| r.params.to_string().len())
        .max()
        .unwrap_or(0)
        .max(6);
    writeln!(
        out,
        "{:<17} {:<pw$} {:>24} {:>24} {:>9} {:>9} {:<14} note",
        "case", "params", "lhs", "rhs", "abs_diff", "tol", "status",
        pw = params_width
    )?;
    for r in records {
        writeln!(
            out,
            "{:<17} {:<pw$} {:>24} {:>24} {:>9.2e} {:>9.0e} {:<14} {}",
            r.id.name(),
            r.params.to_string(),
            format!("{:.15e}", r.lhs.re),
            format!("{:.15e}", r.rhs.re),
            r.abs_diff,
            r.tol,
            r.status.as_str(),
            r.note,
            pw = params_width
        )?;
    }
    writeln!(out, "{}", Summary::of(records))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float17_round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE, -0.0, 7.0] {
            let s = float17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
            assert_eq!(json_number(x).unwrap().to_string(), s);
        }
        assert_eq!(float17(1.0), "1.0000000000000000e+0");
        assert_eq!(float17(f64::NAN), "NaN");
        assert_eq!(float17(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn json_numbers_keep_digits() {
        let n = json_number(1.0 / 3.0).unwrap();
        assert_eq!(n.to_string(), float17(1.0 / 3.0));
        assert!(json_number(f64::INFINITY).is_none());
    }
}
