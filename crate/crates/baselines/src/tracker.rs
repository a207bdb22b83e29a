use std::time::Instant;

use gbo_core::{GboError, Objective, Record, Result, RoundTrace, Termination};

/// Counts calls and remembers the best evaluation made.
pub(crate) struct Tracker<'f, F> {
    f: &'f F,
    evaluations: u64,
    best_value: f64,
    best_point: Vec<f64>,
    trace: Vec<RoundTrace<f64>>,
    started: Instant,
}

impl<'f, F: Objective<f64>> Tracker<'f, F> {
    pub fn new(f: &'f F) -> Self {
        Self {
            f,
            evaluations: 0,
            best_value: f64::INFINITY,
            best_point: Vec::new(),
            trace: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn eval(&mut self, x: &[f64]) -> Result<f64> {
        let v = self.f.value(x);
        self.evaluations += 1;
        if !v.is_finite() {
            return Err(GboError::NonFiniteValue {
                point: x.to_vec(),
                value: v,
            });
        }
        if v < self.best_value {
            self.best_value = v;
            self.best_point.clear();
            self.best_point.extend_from_slice(x);
        }
        Ok(v)
    }

    pub fn best_value(&self) -> f64 {
        self.best_value
    }

    pub fn end_round(&mut self, live: usize) {
        self.trace.push(RoundTrace {
            live,
            best_so_far: self.best_value,
        });
    }

    pub fn finish(self) -> Record {
        Record {
            best_value: self.best_value,
            best_point: self.best_point,
            evaluations: self.evaluations,
            rounds: self.trace.len() as u32,
            wall_time: self.started.elapsed().as_secs_f64(),
            round_trace: self.trace,
            termination: Termination::Completed,
        }
    }
}
