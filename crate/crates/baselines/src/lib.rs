//! Point-based reference optimizers (particle swarm, differential
//! evolution, binary genetic algorithm, simulated annealing) sharing the
//! [`RunRecord`](gbo_core::RunRecord) shape of the ball optimizer.
//!
//! All four are seeded, clamp their moves into the box and report the best
//! evaluation they made. Evaluations are counted per call; nothing is cached.

mod bounds;
pub mod de;
pub mod ga;
pub mod pso;
pub mod sa;
mod tracker;

use std::fmt;
use std::str::FromStr;

use gbo_core::{GboError, Objective, Record, Result};
use serde::{Deserialize, Serialize};

pub use bounds::Bounds;
pub use de::{de_optimize, DeConfig};
pub use ga::{ga_optimize, GaConfig};
pub use pso::{pso_optimize, PsoConfig};
pub use sa::{sa_optimize, SaConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Baseline {
    Pso,
    De,
    Ga,
    Sa,
}

impl Baseline {
    pub const ALL: [Baseline; 4] = [Baseline::Pso, Baseline::De, Baseline::Ga, Baseline::Sa];

    pub fn name(self) -> &'static str {
        match self {
            Baseline::Pso => "pso",
            Baseline::De => "de",
            Baseline::Ga => "ga",
            Baseline::Sa => "sa",
        }
    }
}

impl fmt::Display for Baseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Baseline {
    type Err = GboError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| GboError::InvalidConfig(format!("unknown baseline '{s}' (expected pso, de, ga or sa)")))
    }
}

/// Settings for one of the baselines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "algorithm", rename_all = "lowercase")]
pub enum BaselineConfig {
    Pso(PsoConfig),
    De(DeConfig),
    Ga(GaConfig),
    Sa(SaConfig),
}

impl BaselineConfig {
    /// Library defaults for `kind`.
    pub fn defaults(kind: Baseline) -> Self {
        match kind {
            Baseline::Pso => Self::Pso(PsoConfig::default()),
            Baseline::De => Self::De(DeConfig::default()),
            Baseline::Ga => Self::Ga(GaConfig::default()),
            Baseline::Sa => Self::Sa(SaConfig::default()),
        }
    }

    pub fn kind(&self) -> Baseline {
        match self {
            Self::Pso(_) => Baseline::Pso,
            Self::De(_) => Baseline::De,
            Self::Ga(_) => Baseline::Ga,
            Self::Sa(_) => Baseline::Sa,
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            Self::Pso(c) => c.seed,
            Self::De(c) => c.seed,
            Self::Ga(c) => c.seed,
            Self::Sa(c) => c.seed,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        match &mut self {
            Self::Pso(c) => c.seed = seed,
            Self::De(c) => c.seed = seed,
            Self::Ga(c) => c.seed = seed,
            Self::Sa(c) => c.seed = seed,
        }
        self
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Pso(c) => c.validate(),
            Self::De(c) => c.validate(),
            Self::Ga(c) => c.validate(),
            Self::Sa(c) => c.validate(),
        }
    }

    pub fn run(&self, f: &impl Objective<f64>) -> Result<Record> {
        match self {
            Self::Pso(c) => pso_optimize(f, c),
            Self::De(c) => de_optimize(f, c),
            Self::Ga(c) => ga_optimize(f, c),
            Self::Sa(c) => sa_optimize(f, c),
        }
    }
}

pub(crate) fn check_population(size_pop: usize, max_iter: usize) -> Result<()> {
    if size_pop < 2 {
        return Err(GboError::InvalidConfig(format!(
            "size_pop must be at least 2, got {size_pop}"
        )));
    }
    if max_iter < 1 {
        return Err(GboError::InvalidConfig("max_iter must be at least 1".into()));
    }
    Ok(())
}

pub(crate) fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GboError::InvalidConfig(format!("{name} must lie in [0, 1], got {p}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for b in Baseline::ALL {
            assert_eq!(b.to_string().parse::<Baseline>().unwrap(), b);
        }
        assert_eq!("PSO".parse::<Baseline>().unwrap(), Baseline::Pso);
        assert!("afsa".parse::<Baseline>().is_err());
    }

    #[test]
    fn config_json_is_tagged() {
        let c = BaselineConfig::defaults(Baseline::De).with_seed(9);
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"algorithm\":\"de\""), "{s}");
        assert_eq!(serde_json::from_str::<BaselineConfig>(&s).unwrap(), c);
        assert_eq!(c.seed(), 9);
        assert_eq!(c.kind(), Baseline::De);
    }
}
