use gbo_core::FunctionId;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::spec::Algorithm;
use crate::table::{ResultTable, RunStatus};

/// Two unimodal and two multimodal functions.
pub const STABILITY_FUNCTIONS: [FunctionId; 4] = [FunctionId::F3, FunctionId::F4, FunctionId::F5, FunctionId::F11];
pub const STABILITY_REPEATS: usize = 10;
/// Added before taking logs so exact zeros stay plottable.
pub const LOG_FLOOR: f64 = 1e-31;

pub fn log_error(error: f64) -> f64 {
    (error + LOG_FLOOR).log10()
}

/// Per-repeat errors of one algorithm on one function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilitySeries {
    pub function: FunctionId,
    pub algorithm: Algorithm,
    /// Ordered by repeat.
    pub errors: Vec<f64>,
    pub log_errors: Vec<f64>,
    pub mean_error: f64,
    pub mean_log_error: f64,
    /// Population variance of `errors`.
    pub variance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub series: Vec<StabilitySeries>,
}

impl StabilityReport {
    pub fn get(&self, function: FunctionId, algorithm: Algorithm) -> Option<&StabilitySeries> {
        self.series
            .iter()
            .find(|s| s.function == function && s.algorithm == algorithm)
    }

    /// Long-form CSV: one line per repeat.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["function", "algorithm", "repeat", "error", "log10_error"])?;
        for s in &self.series {
            for (k, (e, l)) in s.errors.iter().zip(&s.log_errors).enumerate() {
                w.write_record([
                    s.function.to_string(),
                    s.algorithm.to_string(),
                    k.to_string(),
                    e.to_string(),
                    l.to_string(),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| HarnessError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Mean errors, one line per (function, algorithm).
    pub fn summary_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["function", "algorithm", "mean_error", "mean_log10_error", "variance"])?;
        for s in &self.series {
            w.write_record([
                s.function.to_string(),
                s.algorithm.to_string(),
                s.mean_error.to_string(),
                s.mean_log_error.to_string(),
                s.variance.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| HarnessError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Error series for every algorithm in `table` on each of `functions`.
/// Each series needs [`STABILITY_REPEATS`] successful runs.
pub fn stability_report(table: &ResultTable, functions: &[FunctionId]) -> Result<StabilityReport> {
    let mut series = Vec::new();
    for &function in functions {
        for algorithm in table.algorithms() {
            let mut rows: Vec<_> = table
                .cell(function, algorithm)
                .filter(|r| r.status != RunStatus::Failed)
                .collect();
            if rows.len() < STABILITY_REPEATS {
                return Err(HarnessError::InsufficientRepeats {
                    function: function.to_string(),
                    algorithm: algorithm.to_string(),
                    found: rows.len(),
                    needed: STABILITY_REPEATS,
                });
            }
            rows.sort_by_key(|r| r.repeat);
            let errors: Vec<f64> = rows
                .iter()
                .map(|r| r.error.expect("successful rows carry an error"))
                .collect();
            let log_errors: Vec<f64> = errors.iter().map(|e| log_error(*e)).collect();
            let n = errors.len() as f64;
            let mean_error = errors.iter().sum::<f64>() / n;
            let mean_log_error = log_errors.iter().sum::<f64>() / n;
            let variance = errors.iter().map(|e| (e - mean_error).powi(2)).sum::<f64>() / n;
            series.push(StabilitySeries {
                function,
                algorithm,
                errors,
                log_errors,
                mean_error,
                mean_log_error,
                variance,
            });
        }
    }
    Ok(StabilityReport { series })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_error_sits_at_the_floor() {
        assert_eq!(log_error(0.0), -31.0);
        assert_eq!(log_error(1.0), 1f64.log10());
    }
}
