//! The granular-ball optimizer: cover the box with one ball, then keep
//! splitting every ball whose sub-balls strictly improve on it.

use std::collections::HashMap;
use std::hash::BuildHasherDefault;
use std::time::Instant;

use rustc_hash::FxHasher;
use serde::{Deserialize, Serialize};

use crate::ball::{GranularBall, RadiusRule};
use crate::cache::{EvaluationCache, OutOfBoundsPolicy};
use crate::error::{GboError, Result};
use crate::objective::Objective;
use crate::quality::{BallEvaluator, BallValue, EvaluationMode};
use crate::record::{RoundTrace, RunRecord, Termination};
use crate::scalar::Scalar;

/// Which balls are split when a live ball is processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitRule {
    /// Only the ball itself: `2d` sub-balls of half its radius.
    OwnShell,
    /// The ball and every concentric shell that entered its value: `2d`
    /// sub-balls per shell, each of half that shell's radius. Identical to
    /// [`SplitRule::OwnShell`] under [`EvaluationMode::Basic`].
    #[default]
    EveryShell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct GboConfig {
    pub mode: EvaluationMode,
    pub split: SplitRule,
    pub radius_rule: RadiusRule,
    pub oob_policy: OutOfBoundsPolicy,
    /// Distinct evaluations allowed before the run is cut short.
    pub max_evaluations: u64,
    /// Splitting rounds allowed before the run is cut short.
    pub max_rounds: u32,
    /// Seed for stochastic objectives; unused by the optimizer itself.
    pub noise_seed: u64,
}

impl Default for GboConfig {
    fn default() -> Self {
        Self {
            mode: EvaluationMode::PrimeConcentric,
            split: SplitRule::EveryShell,
            radius_rule: RadiusRule::DimensionRoot,
            oob_policy: OutOfBoundsPolicy::Clamp,
            max_evaluations: 10_000_000,
            max_rounds: 64,
            noise_seed: 0,
        }
    }
}

impl GboConfig {
    pub fn basic() -> Self {
        Self {
            mode: EvaluationMode::Basic,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_evaluations == 0 {
            return Err(GboError::InvalidConfig("max_evaluations must be at least 1".into()));
        }
        if self.max_rounds == 0 {
            return Err(GboError::InvalidConfig("max_rounds must be at least 1".into()));
        }
        Ok(())
    }
}

/// A ball in the current set, with its already-computed value.
#[derive(Debug, Clone, PartialEq)]
pub struct LiveBall<T: Scalar> {
    pub ball: GranularBall<T>,
    pub value: BallValue<T>,
}

type FxMap<K, V> = HashMap<K, V, BuildHasherDefault<FxHasher>>;

/// Optimizer state between rounds: the memo, the evaluator and the best
/// value seen so far.
pub struct GboState<'f, T: Scalar, F> {
    evaluator: BallEvaluator<'f, T, F>,
    cache: EvaluationCache<T>,
    best: BallValue<T>,
    split: SplitRule,
    policy: OutOfBoundsPolicy,
    f: &'f F,
}

impl<'f, T: Scalar, F: Objective<T>> GboState<'f, T, F> {
    /// Builds the covering ball, evaluates it and returns it as the first live set.
    pub fn start(f: &'f F, config: &GboConfig) -> Result<(Self, Vec<LiveBall<T>>)> {
        config.validate()?;
        let ball = GranularBall::initial(f.domain(), config.radius_rule);
        let mut evaluator = BallEvaluator::new(f, config.oob_policy, config.mode, ball.radius());
        let mut cache = EvaluationCache::with_limit(config.max_evaluations);
        let value = evaluator.value(&ball, &mut cache)?;
        let state = Self {
            evaluator,
            cache,
            best: value.clone(),
            split: config.split,
            policy: config.oob_policy,
            f,
        };
        Ok((state, vec![LiveBall { ball, value }]))
    }

    pub fn best(&self) -> &BallValue<T> {
        &self.best
    }

    pub fn cache(&self) -> &EvaluationCache<T> {
        &self.cache
    }

    fn children(&mut self, ball: &GranularBall<T>) -> Result<Vec<GranularBall<T>>> {
        let shells = match self.split {
            SplitRule::OwnShell => vec![ball.radius()],
            SplitRule::EveryShell => self.evaluator.shell_radii(ball.radius()),
        };
        let mut out = Vec::with_capacity(shells.len() * 2 * ball.dimension());
        for shell in shells {
            if shell == ball.radius() {
                out.extend(ball.sub_balls());
            } else {
                out.extend(ball.concentric(shell)?.sub_balls());
            }
        }
        Ok(out)
    }

    /// One round. Every live ball updates the best-so-far and is split; a
    /// sub-ball survives when its value is strictly below its parent's. A
    /// sub-ball reached from several parents is evaluated and kept once.
    pub fn round_step(&mut self, current: &[LiveBall<T>]) -> Result<Vec<LiveBall<T>>> {
        let mut candidates: Vec<(LiveBall<T>, bool)> = Vec::new();
        let mut index: FxMap<Vec<u64>, usize> = FxMap::default();
        for live in current {
            if live.value.value < self.best.value {
                self.best = live.value.clone();
            }
            for child in self.children(&live.ball)? {
                let key = child.key();
                let slot = match index.get(&key) {
                    Some(&slot) => slot,
                    None => {
                        let value = self.evaluator.value(&child, &mut self.cache)?;
                        candidates.push((LiveBall { ball: child, value }, false));
                        index.insert(key, candidates.len() - 1);
                        candidates.len() - 1
                    }
                };
                let (candidate, admitted) = &mut candidates[slot];
                if !*admitted && candidate.value.value < live.value.value {
                    *admitted = true;
                }
            }
        }
        Ok(candidates
            .into_iter()
            .filter_map(|(live, admitted)| admitted.then_some(live))
            .collect())
    }

    fn absorb(&mut self, balls: &[LiveBall<T>]) {
        for live in balls {
            if live.value.value < self.best.value {
                self.best = live.value.clone();
            }
        }
    }

    fn absorb_cache_best(&mut self) {
        if let Some((value, point)) = self.cache.best() {
            if value < self.best.value {
                self.best = BallValue {
                    value,
                    witness: point.to_vec(),
                    shell_radius: T::zero(),
                };
            }
        }
    }

    fn finish(
        self,
        rounds: u32,
        trace: Vec<RoundTrace<T>>,
        termination: Termination,
        started: Instant,
    ) -> RunRecord<T> {
        let mut best_point = Vec::new();
        self.policy.apply_into(&self.best.witness, self.f, &mut best_point);
        RunRecord {
            best_value: self.best.value,
            best_point,
            evaluations: self.cache.count(),
            rounds,
            wall_time: started.elapsed().as_secs_f64(),
            round_trace: trace,
            termination,
        }
    }
}

/// Runs the optimizer to natural convergence or until a budget trips.
///
/// A tripped budget still yields a record, flagged through
/// [`RunRecord::termination`]. Non-finite objective values are errors.
pub fn gbo_optimize<T: Scalar, F: Objective<T>>(f: &F, config: &GboConfig) -> Result<RunRecord<T>> {
    let started = Instant::now();
    let (mut state, mut current) = match GboState::start(f, config) {
        Ok(s) => s,
        Err(GboError::EvaluationBudget(_)) => {
            return Err(GboError::InvalidConfig(
                "evaluation budget too small for the covering ball".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    let mut trace = Vec::new();
    let mut rounds = 0;
    let termination = loop {
        if current.is_empty() {
            break Termination::Converged;
        }
        if rounds >= config.max_rounds {
            state.absorb(&current);
            break Termination::RoundBudget;
        }
        rounds += 1;
        match state.round_step(&current) {
            Ok(next) => {
                trace.push(RoundTrace {
                    live: current.len(),
                    best_so_far: state.best.value,
                });
                current = next;
            }
            Err(GboError::EvaluationBudget(_)) => {
                state.absorb(&current);
                state.absorb_cache_best();
                trace.push(RoundTrace {
                    live: current.len(),
                    best_so_far: state.best.value,
                });
                break Termination::EvaluationBudget;
            }
            Err(e) => return Err(e),
        }
    };
    Ok(state.finish(rounds, trace, termination, started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::initial_ball;
    use crate::domain::SearchDomain;
    use crate::objective::FnObjective;

    fn sphere2() -> FnObjective<f64, impl Fn(&[f64]) -> f64> {
        FnObjective::new(SearchDomain::uniform(100.0, 2).unwrap(), |x: &[f64]| {
            x.iter().map(|v| v * v).sum()
        })
    }

    #[test]
    fn sphere_first_round_keeps_all_four_sub_balls() {
        // Under clamping the covering ball (R0 = 100*sqrt(2)) sees f = 10000
        // at all four clamped boundary points. Each depth-1 sub-ball has the
        // origin as a boundary point, so its value is 0 < 10000.
        let f = sphere2();
        let config = GboConfig::basic();
        let (mut state, current) = GboState::start(&f, &config).unwrap();
        assert_eq!(current[0].value.value, 10000.0);
        assert_eq!(current[0].value.witness[0], initial_ball(f.domain()).radius());
        let next = state.round_step(&current).unwrap();
        assert_eq!(next.len(), 4);
        for live in &next {
            assert_eq!(live.value.value, 0.0);
            assert_eq!(live.ball.radius(), current[0].ball.radius() / 2.0);
        }
        // The parent's 4 clamped points, then the origin and the four
        // diagonal points (r/2, r/2) each shared by two neighbouring children.
        assert_eq!(state.cache().count(), 4 + 1 + 4);
    }

    #[test]
    fn plateau_stops_after_one_round() {
        let f = FnObjective::new(SearchDomain::uniform(10.0, 2).unwrap(), |_: &[f64]| 7.0);
        for config in [GboConfig::basic(), GboConfig::default()] {
            let rec = gbo_optimize(&f, &config).unwrap();
            assert_eq!(rec.best_value, 7.0);
            assert_eq!(rec.rounds, 1);
            assert_eq!(rec.termination, Termination::Converged);
        }
    }

    #[test]
    fn empty_next_set_means_convergence() {
        let f = FnObjective::new(SearchDomain::uniform(10.0, 2).unwrap(), |_: &[f64]| 7.0);
        let (mut state, current) = GboState::start(&f, &GboConfig::basic()).unwrap();
        assert!(state.round_step(&current).unwrap().is_empty());
    }

    #[test]
    fn sphere_reaches_exact_zero_at_origin() {
        let rec = gbo_optimize(&sphere2(), &GboConfig::basic()).unwrap();
        assert_eq!(rec.best_value, 0.0);
        assert_eq!(rec.best_point, vec![0.0, 0.0]);
        assert_eq!(rec.termination, Termination::Converged);
    }

    #[test]
    fn rejects_zero_budgets() {
        let f = sphere2();
        let bad = GboConfig {
            max_rounds: 0,
            ..GboConfig::default()
        };
        assert!(matches!(gbo_optimize(&f, &bad), Err(GboError::InvalidConfig(_))));
        let bad = GboConfig {
            max_evaluations: 0,
            ..GboConfig::default()
        };
        assert!(matches!(gbo_optimize(&f, &bad), Err(GboError::InvalidConfig(_))));
    }

    #[test]
    fn evaluation_budget_is_flagged_not_fatal() {
        // Goldstein-Price needs over a thousand evaluations in basic mode
        let f = crate::bench::make_function::<f64>(crate::bench::FunctionId::F9, None).unwrap();
        let config = GboConfig {
            max_evaluations: 40,
            ..GboConfig::basic()
        };
        let rec = gbo_optimize(&f, &config).unwrap();
        assert_eq!(rec.termination, Termination::EvaluationBudget);
        assert!(rec.evaluations <= 40);
    }

    #[test]
    fn round_budget_is_flagged_not_fatal() {
        let f = FnObjective::new(SearchDomain::uniform(3.0, 1).unwrap(), |x: &[f64]| {
            x[0] * x[0] + 2.0 * x[0] - 1.0
        });
        let config = GboConfig {
            max_rounds: 2,
            ..GboConfig::basic()
        };
        let rec = gbo_optimize(&f, &config).unwrap();
        assert_eq!(rec.termination, Termination::RoundBudget);
        assert_eq!(rec.rounds, 2);
    }

    #[test]
    fn non_finite_objective_is_an_error() {
        let f = FnObjective::new(SearchDomain::uniform(1.0, 2).unwrap(), |x: &[f64]| x[0].ln());
        assert!(matches!(
            gbo_optimize(&f, &GboConfig::default()),
            Err(GboError::NonFiniteValue { .. })
        ));
    }

    #[test]
    fn works_in_single_precision() {
        let f = FnObjective::new(SearchDomain::uniform(100.0f32, 2).unwrap(), |x: &[f32]| {
            x.iter().map(|v| v * v).sum()
        });
        let rec = gbo_optimize(&f, &GboConfig::default()).unwrap();
        assert_eq!(rec.best_value, 0.0f32);
    }
}
