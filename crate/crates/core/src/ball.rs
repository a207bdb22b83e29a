//! Granular-ball geometry: the covering ball, its axis boundary points, and
//! the half-radius sub-balls that splitting produces.

use serde::{Deserialize, Serialize};

use crate::domain::SearchDomain;
use crate::error::{GboError, Result};
use crate::scalar::Scalar;

/// How the radius of the initial (covering) ball is derived from the domain
/// halfwidths `a_1..a_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiusRule {
    /// `sqrt(a_1^2 + ... + a_d^2)`: the smallest origin-centred ball that
    /// reaches every corner of the box.
    Euclidean,
    /// `(a_1^2 + ... + a_d^2)^(1/d)` with the root order floored at 2, so it
    /// agrees with [`RadiusRule::Euclidean`] for `d <= 2` and shrinks towards
    /// the origin in higher dimensions.
    #[default]
    DimensionRoot,
}

impl RadiusRule {
    pub fn initial_radius<T: Scalar>(self, halfwidths: &[T]) -> T {
        let sum_sq = halfwidths.iter().fold(T::zero(), |acc, a| acc + *a * *a);
        match self {
            RadiusRule::Euclidean => sum_sq.sqrt(),
            RadiusRule::DimensionRoot if halfwidths.len() <= 2 => sum_sq.sqrt(),
            RadiusRule::DimensionRoot => {
                let order = T::from_usize(halfwidths.len()).expect("dimension fits the scalar");
                sum_sq.powf(order.recip())
            }
        }
    }
}

/// A hypersphere over the solution space, described by its center and radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct GranularBall<T: Scalar> {
    center: Vec<T>,
    radius: T,
    depth: u32,
}

/// Covering ball of `domain`: centered at the origin with Euclidean radius.
pub fn initial_ball<T: Scalar>(domain: &SearchDomain<T>) -> GranularBall<T> {
    GranularBall::initial(domain, RadiusRule::Euclidean)
}

impl<T: Scalar> GranularBall<T> {
    pub fn new(center: Vec<T>, radius: T, depth: u32) -> Result<Self> {
        if center.is_empty() {
            return Err(GboError::InvalidBall("center has no coordinates".into()));
        }
        if !(radius.is_finite() && radius > T::zero()) {
            return Err(GboError::InvalidBall(format!(
                "radius must be positive and finite, got {radius}"
            )));
        }
        if center.iter().any(|c| !c.is_finite()) {
            return Err(GboError::InvalidBall("center has a non-finite coordinate".into()));
        }
        Ok(Self { center, radius, depth })
    }

    pub fn initial(domain: &SearchDomain<T>, rule: RadiusRule) -> Self {
        Self {
            center: vec![T::zero(); domain.dimension()],
            radius: rule.initial_radius(domain.halfwidths()),
            depth: 0,
        }
    }

    pub fn center(&self) -> &[T] {
        &self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn dimension(&self) -> usize {
        self.center.len()
    }

    /// Writes boundary point `index` into `out`. Index `2i` moves axis `i` by
    /// `+radius`, index `2i + 1` by `-radius`.
    pub fn boundary_point_into(&self, index: usize, out: &mut Vec<T>) {
        shell_point_into(&self.center, self.radius, index, out);
    }

    /// The `2d` axis boundary points, axis-major with `+` before `-`.
    pub fn boundary_points(&self) -> Vec<Vec<T>> {
        (0..2 * self.dimension())
            .map(|k| {
                let mut p = Vec::with_capacity(self.dimension());
                self.boundary_point_into(k, &mut p);
                p
            })
            .collect()
    }

    /// Same-center ball with a different radius.
    pub fn concentric(&self, radius: T) -> Result<Self> {
        Self::new(self.center.clone(), radius, self.depth)
    }

    /// The `2d` sub-balls, one per boundary point and in the same order. Each
    /// is centered midway between this center and its boundary point, with
    /// half the radius.
    pub fn sub_balls(&self) -> Vec<Self> {
        let half = T::half();
        let radius = self.radius * half;
        let mut point = Vec::with_capacity(self.dimension());
        (0..2 * self.dimension())
            .map(|k| {
                self.boundary_point_into(k, &mut point);
                let center = self.center.iter().zip(&point).map(|(c, b)| half * (*c + *b)).collect();
                Self {
                    center,
                    radius,
                    depth: self.depth + 1,
                }
            })
            .collect()
    }

    /// Identity of this ball for duplicate suppression: exact center bits and radius bits.
    pub fn key(&self) -> Vec<u64> {
        self.center
            .iter()
            .map(|c| c.key_bits())
            .chain(std::iter::once(self.radius.key_bits()))
            .collect()
    }
}

pub(crate) fn shell_point_into<T: Scalar>(center: &[T], radius: T, index: usize, out: &mut Vec<T>) {
    out.clear();
    out.extend_from_slice(center);
    let axis = index / 2;
    if index.is_multiple_of(2) {
        out[axis] = out[axis] + radius;
    } else {
        out[axis] = out[axis] - radius;
    }
}
