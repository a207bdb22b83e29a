//! Global-best particle swarm with a constant inertia weight.

use gbo_core::{GboError, Objective, Record, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::tracker::Tracker;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PsoConfig {
    pub size_pop: usize,
    /// Iterations, the initial swarm counting as the first.
    pub max_iter: usize,
    /// Inertia weight.
    pub w: f64,
    /// Pull towards each particle's own best.
    pub c1: f64,
    /// Pull towards the swarm's best.
    pub c2: f64,
    /// Defaults to the objective's box.
    pub bounds: Option<Bounds>,
    pub seed: u64,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            size_pop: 40,
            max_iter: 150,
            w: 0.8,
            c1: 0.5,
            c2: 0.5,
            bounds: None,
            seed: 0,
        }
    }
}

impl PsoConfig {
    pub fn validate(&self) -> Result<()> {
        crate::check_population(self.size_pop, self.max_iter)?;
        if ![self.w, self.c1, self.c2].iter().all(|v| v.is_finite() && *v >= 0.0) {
            return Err(GboError::InvalidConfig(
                "w, c1 and c2 must be finite and non-negative".into(),
            ));
        }
        Ok(())
    }
}

pub fn pso_optimize(f: &impl Objective<f64>, config: &PsoConfig) -> Result<Record> {
    config.validate()?;
    let bounds = Bounds::resolve(config.bounds.as_ref(), f)?;
    let d = bounds.dimension();
    let n = config.size_pop;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut track = Tracker::new(f);

    let mut x: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..d).map(|i| rng.gen_range(bounds.lb[i]..=bounds.ub[i])).collect())
        .collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            (0..d)
                .map(|i| {
                    let span = bounds.width(i);
                    rng.gen_range(-span..=span)
                })
                .collect()
        })
        .collect();
    let mut pbest = x.clone();
    let mut pbest_y = Vec::with_capacity(n);
    for p in &x {
        pbest_y.push(track.eval(p)?);
    }
    let mut g = argmin(&pbest_y);
    track.end_round(n);

    for _ in 1..config.max_iter {
        let gbest = pbest[g].clone();
        for k in 0..n {
            for i in 0..d {
                let (r1, r2): (f64, f64) = (rng.gen(), rng.gen());
                v[k][i] = config.w * v[k][i]
                    + config.c1 * r1 * (pbest[k][i] - x[k][i])
                    + config.c2 * r2 * (gbest[i] - x[k][i]);
                x[k][i] += v[k][i];
            }
            bounds.clamp(&mut x[k]);
            let y = track.eval(&x[k])?;
            if y < pbest_y[k] {
                pbest_y[k] = y;
                pbest[k].clone_from(&x[k]);
            }
        }
        g = argmin(&pbest_y);
        track.end_round(n);
    }
    Ok(track.finish())
}

pub(crate) fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v < values[best] {
            best = i;
        }
    }
    best
}
