use std::fs::File;
use std::panic::{self, AssertUnwindSafe};
use std::sync::Mutex;

use gbo_core::{make_function, optimize_benchmark, Benchmark, FunctionId, Record};
use rayon::prelude::*;

use crate::emit::{csv_record, CSV_HEADER};
use crate::error::{HarnessError, Result};
use crate::spec::{Algorithm, ExperimentSpec};
use crate::table::{ResultTable, Row, RunStatus};

/// Runs every (function, algorithm, repeat) triple of `spec`.
///
/// A run that errors or panics becomes a failed row. With `spec.output` set,
/// each finished row is appended and flushed to that CSV file at once.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ResultTable> {
    spec.validate()?;
    let tasks: Vec<(FunctionId, Algorithm, usize)> = spec
        .functions
        .iter()
        .flat_map(|f| {
            spec.algorithms
                .iter()
                .flat_map(move |a| (0..spec.repeats).map(move |k| (*f, *a, k)))
        })
        .collect();

    let journal = match &spec.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| HarnessError::io(path, e))?;
            let mut w = csv::Writer::from_writer(file);
            w.write_record(CSV_HEADER)?;
            w.flush().map_err(|e| HarnessError::io(path, e))?;
            Some(Mutex::new(w))
        }
        None => None,
    };

    let work = |&(function, algorithm, repeat): &(FunctionId, Algorithm, usize)| -> Result<Row> {
        let row = run_one(spec, function, algorithm, repeat);
        if let (Some(j), Some(path)) = (&journal, &spec.output) {
            let mut w = j.lock().unwrap_or_else(|p| p.into_inner());
            w.write_record(csv_record(&row))?;
            w.flush().map_err(|e| HarnessError::io(path, e))?;
        }
        Ok(row)
    };
    let rows: Vec<Row> = if spec.parallel {
        tasks.par_iter().map(work).collect::<Result<_>>()?
    } else {
        tasks.iter().map(work).collect::<Result<_>>()?
    };
    Ok(ResultTable {
        spec: spec.clone(),
        rows,
    })
}

fn run_one(spec: &ExperimentSpec, function: FunctionId, algorithm: Algorithm, repeat: usize) -> Row {
    let seed = spec.seed(repeat);
    let mut row = Row {
        function,
        algorithm,
        repeat,
        seed,
        dimension: spec
            .dimension_of(function)
            .unwrap_or_else(|| function.default_dimension()),
        best_value: None,
        best_point: Vec::new(),
        error: None,
        wall_time_s: 0.0,
        evaluations: 0,
        rounds: 0,
        status: RunStatus::Failed,
        message: None,
    };
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| -> gbo_core::Result<Record> {
        let f: Benchmark = make_function(function, spec.dimension_of(function))?;
        match algorithm.baseline() {
            None => {
                let config = gbo_core::GboConfig {
                    noise_seed: seed,
                    ..spec.gbo
                };
                optimize_benchmark(&f, &config)
            }
            Some(kind) => spec.baseline_config(kind).with_seed(seed).run(&f.with_noise(seed)),
        }
    }));
    match outcome {
        Ok(Ok(rec)) => {
            let optimum = function.optimum_value();
            row.error = Some((rec.best_value - optimum).abs());
            row.best_value = Some(rec.best_value);
            row.best_point = rec.best_point;
            row.wall_time_s = rec.wall_time.max(0.0);
            row.evaluations = rec.evaluations;
            row.rounds = rec.rounds;
            row.status = if rec.termination.is_budget_exhausted() {
                RunStatus::Budget
            } else {
                RunStatus::Ok
            };
        }
        Ok(Err(e)) => row.message = Some(e.to_string()),
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "run panicked".into());
            row.message = Some(format!("panic: {msg}"));
        }
    }
    row
}
