//! Simulated annealing with heavy-tailed steps and geometric cooling.

use gbo_core::{GboError, Objective, Record, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::tracker::Tracker;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SaConfig {
    /// Starting point; the origin when absent.
    pub x0: Option<Vec<f64>>,
    #[serde(rename = "T_max")]
    pub t_max: f64,
    #[serde(rename = "T_min")]
    pub t_min: f64,
    /// Chain length at each temperature.
    #[serde(rename = "L")]
    pub l: usize,
    /// Temperatures in a row without a new best before stopping early.
    pub max_stay_counter: usize,
    /// Temperature multiplier between chains.
    pub cooling: f64,
    pub bounds: Option<Bounds>,
    pub seed: u64,
}

impl Default for SaConfig {
    fn default() -> Self {
        Self {
            x0: None,
            t_max: 100.0,
            t_min: 1e-7,
            l: 300,
            max_stay_counter: 150,
            cooling: 0.9,
            bounds: None,
            seed: 0,
        }
    }
}

impl SaConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_min > 0.0 && self.t_max >= self.t_min && self.t_max.is_finite()) {
            return Err(GboError::InvalidConfig(format!(
                "temperatures need 0 < T_min <= T_max, got T_min {} and T_max {}",
                self.t_min, self.t_max
            )));
        }
        if self.l == 0 {
            return Err(GboError::InvalidConfig("chain length L must be at least 1".into()));
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return Err(GboError::InvalidConfig(format!(
                "cooling must lie in (0, 1), got {}",
                self.cooling
            )));
        }
        Ok(())
    }
}

/// Step along one coordinate: sign(r) * T * ((1 + 1/T)^|r| - 1) for r uniform
/// in (-1, 1). Log-uniform-ish lengths from about `T` up to 1, so cold chains
/// still try long jumps now and then.
fn step(rng: &mut ChaCha8Rng, t: f64) -> f64 {
    let r: f64 = rng.gen_range(-1.0..1.0);
    r.signum() * t * ((1.0 + 1.0 / t).powf(r.abs()) - 1.0)
}

pub fn sa_optimize(f: &impl Objective<f64>, config: &SaConfig) -> Result<Record> {
    config.validate()?;
    let bounds = Bounds::resolve(config.bounds.as_ref(), f)?;
    let d = bounds.dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut track = Tracker::new(f);

    let mut x = match &config.x0 {
        Some(x0) if x0.len() != d => {
            return Err(GboError::DimensionMismatch {
                expected: d,
                found: x0.len(),
            })
        }
        Some(x0) => x0.clone(),
        None => vec![0.0; d],
    };
    bounds.clamp(&mut x);
    let mut y = track.eval(&x)?;
    let mut candidate = vec![0.0; d];
    let mut t = config.t_max;
    let mut stay = 0;
    loop {
        let before = track.best_value();
        for _ in 0..config.l {
            for i in 0..d {
                candidate[i] = x[i] + step(&mut rng, t) * bounds.width(i);
            }
            bounds.clamp(&mut candidate);
            let yc = track.eval(&candidate)?;
            let dy = yc - y;
            if dy < 0.0 || rng.gen::<f64>() < (-dy / t).exp() {
                x.copy_from_slice(&candidate);
                y = yc;
            }
        }
        track.end_round(config.l);
        stay = if track.best_value() < before { 0 } else { stay + 1 };
        if t <= config.t_min || stay > config.max_stay_counter {
            break;
        }
        t = (t * config.cooling).max(config.t_min);
    }
    Ok(track.finish())
}
