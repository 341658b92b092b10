use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};

use super::MetricsRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::InvalidParameter(format!("unknown report format '{s}', expected json or csv"))),
        }
    }
}

/// `%g`-style formatting with `digits` significant digits: fixed notation for
/// decimal exponents in `[-4, digits)`, scientific otherwise, trailing zeros
/// removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn rounded(x: f64) -> f64 {
    format_significant(x, 6).parse().unwrap_or(x)
}

fn render(records: &[MetricsRecord], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "condition": r.condition,
                        "activation_energy": rounded(r.activation_energy),
                        "cosine_similarity": rounded(r.cosine_similarity),
                    })
                })
                .collect();
            let mut text = serde_json::to_string_pretty(&Value::Array(rows)).expect("report serializes");
            text.push('\n');
            text
        }
        ReportFormat::Csv => {
            let mut text = String::from("condition,activation_energy,cosine_similarity\n");
            for r in records {
                let _ = writeln!(
                    text,
                    "{},{},{}",
                    r.condition,
                    format_significant(r.activation_energy, 6),
                    format_significant(r.cosine_similarity, 6)
                );
            }
            text
        }
    }
}

/// Writes the comparison table. Floats carry six significant digits.
pub fn write_report(records: &[MetricsRecord], path: &Path, format: ReportFormat) -> Result<()> {
    std::fs::write(path, render(records, format)).map_err(|e| Error::io(path, e))
}
