//! Exact-coordinate memo of objective evaluations.

use std::collections::HashMap;
use std::hash::BuildHasherDefault;

use rustc_hash::FxHasher;
use serde::{Deserialize, Serialize};

use crate::error::{GboError, Result};
use crate::objective::Objective;
use crate::scalar::Scalar;

/// What to do with a point that falls outside the search box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutOfBoundsPolicy {
    /// Clamp each coordinate into `[-a_i, a_i]` before evaluating.
    #[default]
    Clamp,
    /// Evaluate the objective at the point as given.
    EvaluateRaw,
}

impl OutOfBoundsPolicy {
    /// Writes the point actually evaluated for `point` into `out`.
    pub fn apply_into<T: Scalar>(self, point: &[T], f: &impl Objective<T>, out: &mut Vec<T>) {
        out.clear();
        out.extend_from_slice(point);
        if self == OutOfBoundsPolicy::Clamp {
            f.domain().clamp_in_place(out);
        }
    }
}

type FxMap<K, V> = HashMap<K, V, BuildHasherDefault<FxHasher>>;

/// Memo table from exact coordinates to stored objective values.
///
/// Each distinct point reaches the raw objective at most once; the count of
/// distinct evaluations is the table size.
#[derive(Debug, Clone)]
pub struct EvaluationCache<T: Scalar> {
    table: FxMap<Box<[u64]>, T>,
    limit: Option<u64>,
    hits: u64,
    best: Option<(T, Vec<T>)>,
    key: Vec<u64>,
}

impl<T: Scalar> Default for EvaluationCache<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> EvaluationCache<T> {
    pub fn new() -> Self {
        Self {
            table: FxMap::default(),
            limit: None,
            hits: 0,
            best: None,
            key: Vec::new(),
        }
    }

    /// Cache that refuses to evaluate more than `limit` distinct points.
    pub fn with_limit(limit: u64) -> Self {
        Self {
            limit: Some(limit),
            ..Self::new()
        }
    }

    /// Number of distinct evaluations so far.
    pub fn count(&self) -> u64 {
        self.table.len() as u64
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Smallest stored value and the point it was evaluated at.
    pub fn best(&self) -> Option<(T, &[T])> {
        self.best.as_ref().map(|(v, p)| (*v, p.as_slice()))
    }

    pub fn get(&self, point: &[T]) -> Option<T> {
        let key: Vec<u64> = point.iter().map(|c| c.key_bits()).collect();
        self.table.get(key.as_slice()).copied()
    }

    pub fn values(&self) -> impl Iterator<Item = T> + '_ {
        self.table.values().copied()
    }

    /// Looks `point` up, evaluating `f` on a miss. `point` is used as given;
    /// see [`evaluate_cached`] for the policy-applying entry point.
    pub fn evaluate(&mut self, point: &[T], f: &impl Objective<T>) -> Result<T> {
        self.key.clear();
        self.key.extend(point.iter().map(|c| c.key_bits()));
        if let Some(v) = self.table.get(self.key.as_slice()) {
            self.hits += 1;
            return Ok(*v);
        }
        if let Some(limit) = self.limit {
            if self.count() >= limit {
                return Err(GboError::EvaluationBudget(limit));
            }
        }
        let value = f.value(point);
        if !value.is_finite() {
            return Err(GboError::NonFiniteValue {
                point: point.iter().map(|c| c.as_f64()).collect(),
                value: value.as_f64(),
            });
        }
        self.table.insert(self.key.as_slice().into(), value);
        if self.best.as_ref().is_none_or(|(b, _)| value < *b) {
            self.best = Some((value, point.to_vec()));
        }
        Ok(value)
    }
}

/// Applies `policy` to `point` and returns the memoized objective value there.
pub fn evaluate_cached<T: Scalar>(
    point: &[T],
    f: &impl Objective<T>,
    cache: &mut EvaluationCache<T>,
    policy: OutOfBoundsPolicy,
) -> Result<T> {
    f.domain().check_point(point)?;
    let mut adjusted = Vec::with_capacity(point.len());
    policy.apply_into(point, f, &mut adjusted);
    cache.evaluate(&adjusted, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::SearchDomain;
    use crate::objective::FnObjective;
    use std::cell::Cell;

    fn sphere() -> FnObjective<f64, impl Fn(&[f64]) -> f64> {
        FnObjective::new(SearchDomain::uniform(100.0, 2).unwrap(), |x: &[f64]| {
            x.iter().map(|v| v * v).sum()
        })
    }

    #[test]
    fn repeated_point_counts_once() {
        let f = sphere();
        let mut cache = EvaluationCache::new();
        assert_eq!(
            evaluate_cached(&[2.0, 0.0], &f, &mut cache, OutOfBoundsPolicy::Clamp),
            Ok(4.0)
        );
        assert_eq!(
            evaluate_cached(&[2.0, 0.0], &f, &mut cache, OutOfBoundsPolicy::Clamp),
            Ok(4.0)
        );
        assert_eq!(cache.count(), 1);
        assert_eq!(cache.hits(), 1);
    }

    #[test]
    fn clamp_policy_evaluates_inside_the_box() {
        let f = sphere();
        let mut cache = EvaluationCache::new();
        let v = evaluate_cached(&[150.0, 0.0], &f, &mut cache, OutOfBoundsPolicy::Clamp).unwrap();
        assert_eq!(v, 10000.0);
        assert_eq!(cache.get(&[100.0, 0.0]), Some(10000.0));
        let raw = evaluate_cached(&[150.0, 0.0], &f, &mut cache, OutOfBoundsPolicy::EvaluateRaw).unwrap();
        assert_eq!(raw, 22500.0);
        assert_eq!(cache.count(), 2);
    }

    #[test]
    fn raw_objective_called_once_per_point() {
        let calls = Cell::new(0u32);
        let f = FnObjective::new(SearchDomain::uniform(1.0, 1).unwrap(), |x: &[f64]| {
            calls.set(calls.get() + 1);
            x[0]
        });
        let mut cache = EvaluationCache::new();
        for _ in 0..5 {
            cache.evaluate(&[0.25], &f).unwrap();
            cache.evaluate(&[-0.0], &f).unwrap();
            cache.evaluate(&[0.0], &f).unwrap();
        }
        assert_eq!(calls.get(), 2);
        assert_eq!(cache.count(), 2);
    }

    #[test]
    fn non_finite_values_are_errors_and_not_stored() {
        let f = FnObjective::new(SearchDomain::uniform(1.0, 1).unwrap(), |x: &[f64]| 1.0 / x[0]);
        let mut cache = EvaluationCache::new();
        assert!(matches!(
            cache.evaluate(&[0.0], &f),
            Err(GboError::NonFiniteValue { .. })
        ));
        assert!(cache.is_empty());
    }

    #[test]
    fn limit_refuses_new_points_but_serves_hits() {
        let f = sphere();
        let mut cache = EvaluationCache::with_limit(1);
        cache.evaluate(&[1.0, 0.0], &f).unwrap();
        assert_eq!(cache.evaluate(&[1.0, 0.0], &f), Ok(1.0));
        assert_eq!(cache.evaluate(&[2.0, 0.0], &f), Err(GboError::EvaluationBudget(1)));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let f = sphere();
        let mut cache = EvaluationCache::new();
        assert!(matches!(
            evaluate_cached(&[1.0], &f, &mut cache, OutOfBoundsPolicy::Clamp),
            Err(GboError::DimensionMismatch { expected: 2, found: 1 })
        ));
    }
}
