//! Repeated-run experiments over the benchmark suite, with a per-run CSV
//! journal and report rendering.

mod emit;
mod error;
mod run;
mod spec;
mod stability;
mod table;

pub use emit::{emit, sci, write_report, Format, CSV_HEADER};
pub use error::{HarnessError, Result};
pub use run::run_experiment;
pub use spec::{Algorithm, ExperimentSpec};
pub use stability::{
    log_error, stability_report, StabilityReport, StabilitySeries, LOG_FLOOR, STABILITY_FUNCTIONS, STABILITY_REPEATS,
};
pub use table::{Aggregate, ResultTable, Row, RunStatus};
