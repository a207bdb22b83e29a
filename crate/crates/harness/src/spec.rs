use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use gbo_baselines::{Baseline, BaselineConfig, DeConfig, GaConfig, PsoConfig, SaConfig};
use gbo_core::{make_function, FunctionId, GboConfig};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Gbo,
    Pso,
    De,
    Ga,
    Sa,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Gbo,
        Algorithm::Pso,
        Algorithm::De,
        Algorithm::Ga,
        Algorithm::Sa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Gbo => "gbo",
            Algorithm::Pso => "pso",
            Algorithm::De => "de",
            Algorithm::Ga => "ga",
            Algorithm::Sa => "sa",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Gbo => "GBO",
            Algorithm::Pso => "PSO",
            Algorithm::De => "DE",
            Algorithm::Ga => "GA",
            Algorithm::Sa => "SA",
        }
    }

    pub fn baseline(self) -> Option<Baseline> {
        match self {
            Algorithm::Gbo => None,
            Algorithm::Pso => Some(Baseline::Pso),
            Algorithm::De => Some(Baseline::De),
            Algorithm::Ga => Some(Baseline::Ga),
            Algorithm::Sa => Some(Baseline::Sa),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                HarnessError::InvalidSpec(format!("unknown algorithm '{s}' (expected gbo, pso, de, ga or sa)"))
            })
    }
}

/// A batch of repeated runs: every function against every algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentSpec {
    pub functions: Vec<FunctionId>,
    pub algorithms: Vec<Algorithm>,
    pub repeats: usize,
    /// Repeat `k` runs with seed `seed_base + k`.
    pub seed_base: u64,
    /// Dimension overrides for variable-dimension functions.
    pub dimensions: BTreeMap<FunctionId, usize>,
    pub gbo: GboConfig,
    pub pso: PsoConfig,
    pub de: DeConfig,
    pub ga: GaConfig,
    pub sa: SaConfig,
    /// CSV journal, appended to after every run.
    pub output: Option<PathBuf>,
    /// Run on the thread pool; turn off for clean wall times.
    pub parallel: bool,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        Self {
            functions: Vec::new(),
            algorithms: vec![Algorithm::Gbo],
            repeats: 10,
            seed_base: 0,
            dimensions: BTreeMap::new(),
            gbo: GboConfig::default(),
            pso: PsoConfig::default(),
            de: DeConfig::default(),
            ga: GaConfig::default(),
            sa: SaConfig::default(),
            output: None,
            parallel: true,
        }
    }
}

impl ExperimentSpec {
    pub fn new(functions: Vec<FunctionId>, algorithms: Vec<Algorithm>, repeats: usize) -> Self {
        Self {
            functions,
            algorithms,
            repeats,
            ..Self::default()
        }
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.repeats == 0 {
            return Err(HarnessError::InvalidSpec("repeats must be at least 1".into()));
        }
        if self.functions.is_empty() {
            return Err(HarnessError::InvalidSpec("no functions given".into()));
        }
        if self.algorithms.is_empty() {
            return Err(HarnessError::InvalidSpec("no algorithms given".into()));
        }
        for (id, d) in &self.dimensions {
            make_function::<f64>(*id, Some(*d))?;
        }
        self.gbo.validate()?;
        for a in &self.algorithms {
            if let Some(b) = a.baseline() {
                self.baseline_config(b).validate()?;
            }
        }
        Ok(())
    }

    pub fn seed(&self, repeat: usize) -> u64 {
        self.seed_base.wrapping_add(repeat as u64)
    }

    pub fn baseline_config(&self, kind: Baseline) -> BaselineConfig {
        match kind {
            Baseline::Pso => BaselineConfig::Pso(self.pso.clone()),
            Baseline::De => BaselineConfig::De(self.de.clone()),
            Baseline::Ga => BaselineConfig::Ga(self.ga.clone()),
            Baseline::Sa => BaselineConfig::Sa(self.sa.clone()),
        }
    }

    pub fn dimension_of(&self, id: FunctionId) -> Option<usize> {
        self.dimensions.get(&id).copied()
    }
}
