//! Granular-ball optimization over box-bounded objectives.
//!
//! The optimizer covers the box with one ball, scores each ball by the
//! smallest objective value on its axis-aligned boundary points (optionally
//! also on concentric shells at prime radii), and keeps splitting balls
//! whose sub-balls strictly improve on them. Everything is generic over
//! [`Scalar`] (`f32` or `f64`); the aliases below fix `f64`.
//!
//! ```
//! use gbo_core::{gbo_optimize, make_function, FunctionId, GboConfig};
//!
//! let sphere = make_function::<f64>(FunctionId::F1, None).unwrap();
//! let run = gbo_optimize(&sphere, &GboConfig::default()).unwrap();
//! assert_eq!(run.best_value, 0.0);
//! ```

pub mod ball;
pub mod bench;
pub mod cache;
pub mod domain;
pub mod error;
pub mod gbo;
pub mod objective;
pub mod oracle;
pub mod primes;
pub mod quality;
pub mod record;
pub mod scalar;

pub use ball::{initial_ball, GranularBall, RadiusRule};
pub use bench::{make_function, DimensionRule, FunctionId, ObjectiveFunction, Seeded};
pub use cache::{evaluate_cached, EvaluationCache, OutOfBoundsPolicy};
pub use domain::SearchDomain;
pub use error::{GboError, Result};
pub use gbo::{gbo_optimize, GboConfig, GboState, LiveBall, SplitRule};
pub use objective::{FnObjective, Objective, PointNoise};
pub use oracle::oracle_minimum;
pub use primes::{primes_below, PrimeTable};
pub use quality::{ball_value, improved_ball_value, BallEvaluator, BallValue, EvaluationMode};
pub use record::{RoundTrace, RunRecord, Termination};
pub use scalar::Scalar;

pub type Ball = GranularBall<f64>;
pub type Ball32 = GranularBall<f32>;
pub type Domain = SearchDomain<f64>;
pub type Domain32 = SearchDomain<f32>;
pub type Benchmark = ObjectiveFunction<f64>;
pub type Benchmark32 = ObjectiveFunction<f32>;
pub type Record = RunRecord<f64>;
pub type Record32 = RunRecord<f32>;
pub type Cache = EvaluationCache<f64>;

/// Runs the optimizer on a benchmark, drawing any noise from `config.noise_seed`.
pub fn optimize_benchmark<T: Scalar>(f: &ObjectiveFunction<T>, config: &GboConfig) -> Result<RunRecord<T>> {
    gbo_optimize(&f.with_noise(config.noise_seed), config)
}
