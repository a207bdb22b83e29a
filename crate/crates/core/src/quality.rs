//! Ball quality: the minimum objective value over a ball's boundary points,
//! optionally refined with concentric prime-radius shells.

use serde::{Deserialize, Serialize};

use crate::ball::{shell_point_into, GranularBall};
use crate::cache::{EvaluationCache, OutOfBoundsPolicy};
use crate::error::{GboError, Result};
use crate::objective::Objective;
use crate::primes::PrimeTable;
use crate::scalar::Scalar;

/// Which points define a ball's value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvaluationMode {
    /// The `2d` boundary points at the ball's own radius.
    Basic,
    /// The ball's own shell plus one concentric shell for every prime below its radius.
    #[default]
    PrimeConcentric,
}

/// Value of a ball together with the boundary point attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct BallValue<T: Scalar> {
    pub value: T,
    /// Boundary point before the out-of-bounds policy is applied.
    pub witness: Vec<T>,
    /// Radius of the shell the witness lies on.
    pub shell_radius: T,
}

/// Minimum over the `2d` boundary points; ties go to the first point in
/// axis-major, `+`-before-`-` order.
pub fn ball_value<T: Scalar>(
    ball: &GranularBall<T>,
    f: &impl Objective<T>,
    cache: &mut EvaluationCache<T>,
    policy: OutOfBoundsPolicy,
) -> Result<BallValue<T>> {
    BallEvaluator::new(f, policy, EvaluationMode::Basic, ball.radius()).value(ball, cache)
}

/// Minimum of [`ball_value`] over the ball itself and its concentric balls
/// with prime radii below its radius.
pub fn improved_ball_value<T: Scalar>(
    ball: &GranularBall<T>,
    f: &impl Objective<T>,
    cache: &mut EvaluationCache<T>,
    policy: OutOfBoundsPolicy,
) -> Result<BallValue<T>> {
    BallEvaluator::new(f, policy, EvaluationMode::PrimeConcentric, ball.radius()).value(ball, cache)
}

/// Reusable evaluator holding a prime table and scratch buffers.
pub struct BallEvaluator<'f, T: Scalar, F> {
    f: &'f F,
    policy: OutOfBoundsPolicy,
    mode: EvaluationMode,
    primes: PrimeTable,
    point: Vec<T>,
    adjusted: Vec<T>,
}

impl<'f, T: Scalar, F: Objective<T>> BallEvaluator<'f, T, F> {
    /// `max_radius` bounds the radii this evaluator will be asked about.
    pub fn new(f: &'f F, policy: OutOfBoundsPolicy, mode: EvaluationMode, max_radius: T) -> Self {
        let primes = match mode {
            EvaluationMode::Basic => PrimeTable::default(),
            EvaluationMode::PrimeConcentric => PrimeTable::covering(max_radius),
        };
        Self {
            f,
            policy,
            mode,
            primes,
            point: Vec::new(),
            adjusted: Vec::new(),
        }
    }

    pub fn mode(&self) -> EvaluationMode {
        self.mode
    }

    /// Shell radii defining a ball of radius `radius`: the radius itself, then
    /// the primes below it in ascending order.
    pub fn shell_radii(&mut self, radius: T) -> Vec<T> {
        let mut radii = vec![radius];
        if self.mode == EvaluationMode::PrimeConcentric {
            if !self.primes.covers(radius) {
                self.primes = PrimeTable::covering(radius);
            }
            radii.extend(
                self.primes
                    .below(radius)
                    .iter()
                    .map(|&p| T::from_u64(p).expect("prime fits the scalar")),
            );
        }
        radii
    }

    pub fn value(&mut self, ball: &GranularBall<T>, cache: &mut EvaluationCache<T>) -> Result<BallValue<T>> {
        if ball.dimension() != self.f.dimension() {
            return Err(GboError::DimensionMismatch {
                expected: self.f.dimension(),
                found: ball.dimension(),
            });
        }
        let mut best: Option<(T, usize, T)> = None;
        for shell in self.shell_radii(ball.radius()) {
            for k in 0..2 * ball.dimension() {
                shell_point_into(ball.center(), shell, k, &mut self.point);
                self.policy.apply_into(&self.point, self.f, &mut self.adjusted);
                let v = cache.evaluate(&self.adjusted, self.f)?;
                if best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, k, shell));
                }
            }
        }
        let (value, k, shell_radius) = best.expect("a ball has at least two boundary points");
        let mut witness = Vec::with_capacity(ball.dimension());
        shell_point_into(ball.center(), shell_radius, k, &mut witness);
        Ok(BallValue {
            value,
            witness,
            shell_radius,
        })
    }
}
