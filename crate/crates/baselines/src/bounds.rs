use gbo_core::{GboError, Objective, Result};
use serde::{Deserialize, Serialize};

/// Per-coordinate search box `[lb, ub]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lb: Vec<f64>,
    pub ub: Vec<f64>,
}

impl Bounds {
    pub fn new(lb: Vec<f64>, ub: Vec<f64>) -> Result<Self> {
        if lb.len() != ub.len() {
            return Err(GboError::DimensionMismatch {
                expected: lb.len(),
                found: ub.len(),
            });
        }
        if let Some(i) = (0..lb.len()).find(|&i| !(lb[i].is_finite() && ub[i].is_finite() && lb[i] < ub[i])) {
            return Err(GboError::InvalidConfig(format!(
                "bounds need lb < ub, coordinate {i} has [{}, {}]",
                lb[i], ub[i]
            )));
        }
        Ok(Self { lb, ub })
    }

    /// The objective's own box.
    pub fn of(f: &impl Objective<f64>) -> Self {
        let h = f.domain().halfwidths();
        Self {
            lb: h.iter().map(|v| -v).collect(),
            ub: h.to_vec(),
        }
    }

    /// `explicit` if given, checked to sit inside the objective's box;
    /// otherwise the box itself.
    pub(crate) fn resolve(explicit: Option<&Bounds>, f: &impl Objective<f64>) -> Result<Self> {
        let own = Self::of(f);
        let Some(b) = explicit else { return Ok(own) };
        let b = Self::new(b.lb.clone(), b.ub.clone())?;
        if b.dimension() != own.dimension() {
            return Err(GboError::DimensionMismatch {
                expected: own.dimension(),
                found: b.dimension(),
            });
        }
        let inside = (0..b.dimension()).all(|i| b.lb[i] >= own.lb[i] && b.ub[i] <= own.ub[i]);
        if !inside {
            return Err(GboError::InvalidConfig(
                "bounds extend past the objective's domain".into(),
            ));
        }
        Ok(b)
    }

    pub fn dimension(&self) -> usize {
        self.lb.len()
    }

    pub fn width(&self, i: usize) -> f64 {
        self.ub[i] - self.lb[i]
    }

    pub fn clamp(&self, x: &mut [f64]) {
        for (i, v) in x.iter_mut().enumerate() {
            *v = v.clamp(self.lb[i], self.ub[i]);
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter().enumerate().all(|(i, v)| *v >= self.lb[i] && *v <= self.ub[i])
    }
}
