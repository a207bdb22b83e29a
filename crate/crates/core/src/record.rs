use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    /// No ball survived the last split.
    Converged,
    /// A fixed-length run (population methods, annealing) finished its schedule.
    Completed,
    /// The distinct-evaluation budget tripped first.
    EvaluationBudget,
    /// The round budget tripped first.
    RoundBudget,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::Converged => "converged",
            Termination::Completed => "completed",
            Termination::EvaluationBudget => "evaluation-budget",
            Termination::RoundBudget => "round-budget",
        }
    }

    pub fn is_budget_exhausted(self) -> bool {
        matches!(self, Termination::EvaluationBudget | Termination::RoundBudget)
    }
}

/// State after one round (or iteration) of an optimizer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RoundTrace<T: Scalar> {
    /// Balls (or individuals) processed in the round.
    pub live: usize,
    pub best_so_far: T,
}

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RunRecord<T: Scalar> {
    pub best_value: T,
    /// Point the best value was evaluated at (inside the box under clamping).
    pub best_point: Vec<T>,
    /// Distinct objective evaluations.
    pub evaluations: u64,
    pub rounds: u32,
    /// Seconds.
    pub wall_time: f64,
    pub round_trace: Vec<RoundTrace<T>>,
    pub termination: Termination,
}

impl<T: Scalar> RunRecord<T> {
    /// `|best_value - optimum|`.
    pub fn error(&self, optimum: T) -> T {
        (self.best_value - optimum).abs()
    }
}
