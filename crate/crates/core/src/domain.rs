use serde::{Deserialize, Serialize};

use crate::error::{GboError, Result};
use crate::scalar::Scalar;

/// Symmetric box `[-a_1, a_1] x ... x [-a_d, a_d]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SearchDomain<T: Scalar> {
    halfwidths: Vec<T>,
}

impl<T: Scalar> SearchDomain<T> {
    pub fn new(halfwidths: Vec<T>) -> Result<Self> {
        if halfwidths.is_empty() {
            return Err(GboError::InvalidDomain("no axes".into()));
        }
        if let Some((axis, a)) = halfwidths
            .iter()
            .enumerate()
            .find(|(_, a)| !(a.is_finite() && **a > T::zero()))
        {
            return Err(GboError::InvalidDomain(format!(
                "halfwidth of axis {axis} must be positive and finite, got {a}"
            )));
        }
        Ok(Self { halfwidths })
    }

    /// The same halfwidth on every one of `dimension` axes.
    pub fn uniform(halfwidth: T, dimension: usize) -> Result<Self> {
        Self::new(vec![halfwidth; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.halfwidths.len()
    }

    pub fn halfwidths(&self) -> &[T] {
        &self.halfwidths
    }

    pub fn contains(&self, point: &[T]) -> bool {
        point.len() == self.dimension() && point.iter().zip(&self.halfwidths).all(|(x, a)| *x >= -*a && *x <= *a)
    }

    /// Clamps every coordinate into its axis interval, in place.
    pub fn clamp_in_place(&self, point: &mut [T]) {
        for (x, a) in point.iter_mut().zip(&self.halfwidths) {
            *x = x.max(-*a).min(*a);
        }
    }

    pub fn check_point(&self, point: &[T]) -> Result<()> {
        if point.len() != self.dimension() {
            return Err(GboError::DimensionMismatch {
                expected: self.dimension(),
                found: point.len(),
            });
        }
        Ok(())
    }
}
