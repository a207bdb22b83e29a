//! Differential evolution, rand/1/bin.

use gbo_core::{GboError, Objective, Record, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::tracker::Tracker;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DeConfig {
    /// At least 4 so three distinct donors exist.
    pub size_pop: usize,
    /// Generations, the initial population counting as the first.
    pub max_iter: usize,
    /// Crossover rate.
    pub prob_mut: f64,
    /// Differential weight.
    #[serde(rename = "F")]
    pub f: f64,
    pub bounds: Option<Bounds>,
    pub seed: u64,
}

impl Default for DeConfig {
    fn default() -> Self {
        Self {
            size_pop: 50,
            max_iter: 200,
            prob_mut: 0.3,
            f: 0.5,
            bounds: None,
            seed: 0,
        }
    }
}

impl DeConfig {
    pub fn validate(&self) -> Result<()> {
        crate::check_population(self.size_pop, self.max_iter)?;
        crate::check_probability("prob_mut", self.prob_mut)?;
        if !(self.f.is_finite() && self.f > 0.0) {
            return Err(GboError::InvalidConfig(format!("F must be positive, got {}", self.f)));
        }
        if self.size_pop < 4 && self.max_iter > 1 {
            return Err(GboError::InvalidConfig(
                "differential evolution needs size_pop >= 4".into(),
            ));
        }
        Ok(())
    }
}

pub fn de_optimize(f: &impl Objective<f64>, config: &DeConfig) -> Result<Record> {
    config.validate()?;
    let bounds = Bounds::resolve(config.bounds.as_ref(), f)?;
    let d = bounds.dimension();
    let n = config.size_pop;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut track = Tracker::new(f);

    let mut pop: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..d).map(|i| rng.gen_range(bounds.lb[i]..=bounds.ub[i])).collect())
        .collect();
    let mut fit = Vec::with_capacity(n);
    for p in &pop {
        fit.push(track.eval(p)?);
    }
    track.end_round(n);

    let mut trial = vec![0.0; d];
    for _ in 1..config.max_iter {
        for k in 0..n {
            let [a, b, c] = distinct_donors(&mut rng, n, k);
            let j_rand = rng.gen_range(0..d);
            for i in 0..d {
                trial[i] = if i == j_rand || rng.gen::<f64>() < config.prob_mut {
                    pop[a][i] + config.f * (pop[b][i] - pop[c][i])
                } else {
                    pop[k][i]
                };
            }
            bounds.clamp(&mut trial);
            let y = track.eval(&trial)?;
            if y <= fit[k] {
                fit[k] = y;
                pop[k].copy_from_slice(&trial);
            }
        }
        track.end_round(n);
    }
    Ok(track.finish())
}

fn distinct_donors(rng: &mut ChaCha8Rng, n: usize, skip: usize) -> [usize; 3] {
    let mut out = [skip; 3];
    for slot in 0..3 {
        loop {
            let c = rng.gen_range(0..n);
            if c != skip && !out[..slot].contains(&c) {
                out[slot] = c;
                break;
            }
        }
    }
    out
}
