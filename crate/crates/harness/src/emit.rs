use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::table::{Aggregate, ResultTable, Row};

pub const CSV_HEADER: [&str; 9] = [
    "function",
    "algorithm",
    "repeat",
    "best_value",
    "error",
    "wall_time_s",
    "evaluations",
    "rounds",
    "status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

impl FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            other => Err(HarnessError::InvalidSpec(format!(
                "unknown format '{other}' (expected csv, markdown or json)"
            ))),
        }
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub(crate) fn csv_record(row: &Row) -> [String; 9] {
    [
        row.function.to_string(),
        row.algorithm.to_string(),
        row.repeat.to_string(),
        opt(row.best_value),
        opt(row.error),
        row.wall_time_s.to_string(),
        row.evaluations.to_string(),
        row.rounds.to_string(),
        row.status.as_str().to_string(),
    ]
}

/// Scientific notation with a two-digit signed exponent, e.g. `1.35E-31`.
pub fn sci(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{v:.2E}");
    let (mantissa, exp) = s.split_once('E').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

pub fn emit(table: &ResultTable, format: Format) -> Result<String> {
    if table.is_empty() {
        return Err(HarnessError::EmptyTable);
    }
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for row in &table.rows {
                w.write_record(csv_record(row))?;
            }
            let bytes = w.into_inner().map_err(|e| HarnessError::Csv(e.into_error().into()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Json => Ok(serde_json::to_string_pretty(table)?),
        Format::Markdown => Ok(markdown(table)),
    }
}

pub fn write_report(table: &ResultTable, format: Format, path: &Path) -> Result<()> {
    let text = emit(table, format)?;
    std::fs::write(path, text).map_err(|e| HarnessError::io(path, e))
}

fn markdown(table: &ResultTable) -> String {
    let aggregates = table.aggregates();
    let mut out = String::new();
    matrix(&mut out, table, &aggregates, "Mean best value", |a| a.mean_best_value);
    out.push('\n');
    matrix(&mut out, table, &aggregates, "Mean error", |a| a.mean_error);
    out.push('\n');
    matrix(&mut out, table, &aggregates, "Mean running time (s)", |a| a.mean_time_s);
    out
}

/// Functions down, algorithms across; the smallest entry of each row in bold.
fn matrix(
    out: &mut String,
    table: &ResultTable,
    aggregates: &[Aggregate],
    title: &str,
    pick: impl Fn(&Aggregate) -> Option<f64>,
) {
    let algorithms = table.algorithms();
    let _ = writeln!(out, "### {title}\n");
    out.push_str("| Function |");
    for a in &algorithms {
        let _ = write!(out, " {} |", a.label());
    }
    out.push_str("\n|---|");
    for _ in &algorithms {
        out.push_str("---|");
    }
    out.push('\n');
    for f in table.functions() {
        let cells: Vec<Option<f64>> = algorithms
            .iter()
            .map(|a| {
                aggregates
                    .iter()
                    .find(|g| g.function == f && g.algorithm == *a)
                    .and_then(&pick)
            })
            .collect();
        let best = cells.iter().flatten().copied().fold(f64::INFINITY, f64::min);
        let _ = write!(out, "| {f} |");
        for c in cells {
            match c {
                Some(v) if v == best => {
                    let _ = write!(out, " **{}** |", sci(v));
                }
                Some(v) => {
                    let _ = write!(out, " {} |", sci(v));
                }
                None => out.push_str(" failed |"),
            }
        }
        out.push('\n');
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scientific_format() {
        assert_eq!(sci(1.3497838e-31), "1.35E-31");
        assert_eq!(sci(0.0), "0.00E+00");
        assert_eq!(sci(-0.678), "-6.78E-01");
        assert_eq!(sci(3.0), "3.00E+00");
        assert_eq!(sci(123456.0), "1.23E+05");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("md".parse::<Format>().unwrap(), Format::Markdown);
        assert_eq!("CSV".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
