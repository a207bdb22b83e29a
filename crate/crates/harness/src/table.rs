use gbo_core::FunctionId;
use serde::{Deserialize, Serialize};

use crate::spec::{Algorithm, ExperimentSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Ok,
    /// Finished, but a safety budget cut the run short.
    Budget,
    Failed,
}

impl RunStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RunStatus::Ok => "ok",
            RunStatus::Budget => "budget",
            RunStatus::Failed => "failed",
        }
    }

    pub fn succeeded(self) -> bool {
        self != RunStatus::Failed
    }
}

/// One (function, algorithm, repeat) run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub function: FunctionId,
    pub algorithm: Algorithm,
    pub repeat: usize,
    pub seed: u64,
    pub dimension: usize,
    /// `None` for failed runs.
    pub best_value: Option<f64>,
    pub best_point: Vec<f64>,
    /// `|best_value - optimum|`; `None` for failed runs.
    pub error: Option<f64>,
    pub wall_time_s: f64,
    pub evaluations: u64,
    pub rounds: u32,
    pub status: RunStatus,
    /// Why a failed run failed.
    pub message: Option<String>,
}

/// Mean error and time of one (function, algorithm) cell over its successful runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub function: FunctionId,
    pub algorithm: Algorithm,
    pub runs: usize,
    pub failed: usize,
    pub mean_error: Option<f64>,
    pub mean_best_value: Option<f64>,
    pub mean_time_s: Option<f64>,
    /// Population variance of the errors.
    pub error_variance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultTable {
    pub spec: ExperimentSpec,
    pub rows: Vec<Row>,
}

impl ResultTable {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status == RunStatus::Failed).count()
    }

    pub fn budget_hits(&self) -> usize {
        self.rows.iter().filter(|r| r.status == RunStatus::Budget).count()
    }

    /// Functions and algorithms in first-appearance order.
    pub fn functions(&self) -> Vec<FunctionId> {
        let mut out = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.function) {
                out.push(r.function);
            }
        }
        out
    }

    pub fn algorithms(&self) -> Vec<Algorithm> {
        let mut out = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.algorithm) {
                out.push(r.algorithm);
            }
        }
        out
    }

    pub fn cell(&self, function: FunctionId, algorithm: Algorithm) -> impl Iterator<Item = &Row> + '_ {
        self.rows
            .iter()
            .filter(move |r| r.function == function && r.algorithm == algorithm)
    }

    pub fn aggregate(&self, function: FunctionId, algorithm: Algorithm) -> Aggregate {
        let rows: Vec<&Row> = self.cell(function, algorithm).collect();
        let ok: Vec<&Row> = rows.iter().copied().filter(|r| r.status.succeeded()).collect();
        let mean = |f: &dyn Fn(&Row) -> f64| -> Option<f64> {
            (!ok.is_empty()).then(|| ok.iter().map(|r| f(r)).sum::<f64>() / ok.len() as f64)
        };
        let mean_error = mean(&|r| r.error.unwrap_or(f64::NAN));
        let error_variance = mean_error.map(|m| {
            ok.iter()
                .map(|r| (r.error.unwrap_or(f64::NAN) - m).powi(2))
                .sum::<f64>()
                / ok.len() as f64
        });
        Aggregate {
            function,
            algorithm,
            runs: rows.len(),
            failed: rows.len() - ok.len(),
            mean_error,
            mean_best_value: mean(&|r| r.best_value.unwrap_or(f64::NAN)),
            mean_time_s: mean(&|r| r.wall_time_s),
            error_variance,
        }
    }

    pub fn aggregates(&self) -> Vec<Aggregate> {
        let algorithms = self.algorithms();
        self.functions()
            .into_iter()
            .flat_map(|f| algorithms.iter().map(move |a| (f, *a)))
            .map(|(f, a)| self.aggregate(f, a))
            .collect()
    }
}
