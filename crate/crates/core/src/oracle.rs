//! Brute-force reference minimiser for low-dimensional deterministic
//! benchmarks. Slow on purpose: it shares no code with the ball search.

use crate::bench::ObjectiveFunction;
use crate::error::{GboError, Result};
use crate::objective::Objective;
use crate::scalar::Scalar;

/// Cells kept from the coarse scan for refinement.
const SEEDS: usize = 8;
/// Points per axis in each zoom step.
const ZOOM_POINTS: usize = 21;
const ZOOM_STEPS: usize = 60;

/// Scans the box on a grid of spacing `resolution`, then zooms in around the
/// best few cells. Returns the lowest value found and where.
pub fn oracle_minimum<T: Scalar>(f: &ObjectiveFunction<T>, resolution: f64) -> Result<(f64, Vec<f64>)> {
    if !f.is_deterministic() {
        return Err(GboError::OracleUnavailable(format!("{} is stochastic", f.id())));
    }
    let d = f.dimension();
    if d > 2 {
        return Err(GboError::OracleUnavailable(format!(
            "{} has {d} dimensions, the grid scan stops at 2",
            f.id()
        )));
    }
    if !(resolution.is_finite() && resolution > 0.0) {
        return Err(GboError::InvalidConfig(format!(
            "grid resolution must be positive, got {resolution}"
        )));
    }
    let half: Vec<f64> = f.domain().halfwidths().iter().map(|h| h.as_f64()).collect();
    let eval = |x: &[f64]| -> f64 {
        let p: Vec<T> = x.iter().map(|v| T::lit(*v)).collect();
        f.value(&p).as_f64()
    };

    let axes: Vec<Vec<f64>> = half.iter().map(|&a| grid_axis(-a, a, resolution)).collect();
    let mut seeds: Vec<(f64, Vec<f64>)> = Vec::with_capacity(SEEDS + 1);
    let mut x = vec![0.0; d];
    let mut idx = vec![0usize; d];
    'scan: loop {
        for k in 0..d {
            x[k] = axes[k][idx[k]];
        }
        let v = eval(&x);
        if v.is_finite() {
            keep_best(&mut seeds, v, &x, resolution);
        }
        for k in 0..d {
            idx[k] += 1;
            if idx[k] < axes[k].len() {
                continue 'scan;
            }
            idx[k] = 0;
        }
        break;
    }

    let mut best = seeds
        .first()
        .cloned()
        .ok_or_else(|| GboError::OracleUnavailable(format!("{} produced no finite value", f.id())))?;
    for (v0, x0) in seeds {
        let (v, p) = zoom(&eval, &half, v0, x0, resolution);
        if v < best.0 {
            best = (v, p);
        }
    }
    Ok(best)
}

fn grid_axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).floor() as usize;
    let mut axis: Vec<f64> = (0..=n).map(|i| lo + i as f64 * step).collect();
    if *axis.last().unwrap() < hi {
        axis.push(hi);
    }
    // put the exact centre on the grid when it falls between nodes
    if let Err(at) = axis.binary_search_by(|v| v.partial_cmp(&0.0).unwrap()) {
        if lo < 0.0 && hi > 0.0 {
            axis.insert(at, 0.0);
        }
    }
    axis
}

/// Keeps the lowest values, at most one per neighbourhood of two cells.
fn keep_best(seeds: &mut Vec<(f64, Vec<f64>)>, v: f64, x: &[f64], step: f64) {
    if seeds.len() == SEEDS && v >= seeds[SEEDS - 1].0 {
        return;
    }
    let near = |p: &[f64]| p.iter().zip(x).all(|(a, b)| (a - b).abs() <= 2.0 * step);
    if let Some(i) = seeds.iter().position(|(_, p)| near(p)) {
        if v < seeds[i].0 {
            seeds.remove(i);
        } else {
            return;
        }
    }
    let at = seeds.partition_point(|(w, _)| *w <= v);
    seeds.insert(at, (v, x.to_vec()));
    seeds.truncate(SEEDS);
}

fn zoom(eval: &impl Fn(&[f64]) -> f64, half: &[f64], v0: f64, x0: Vec<f64>, step: f64) -> (f64, Vec<f64>) {
    let d = x0.len();
    let (mut best_v, mut best_x) = (v0, x0);
    let mut width = step;
    let mut x = vec![0.0; d];
    for _ in 0..ZOOM_STEPS {
        let centre = best_x.clone();
        let h = 2.0 * width / (ZOOM_POINTS - 1) as f64;
        let mut idx = vec![0usize; d];
        'cell: loop {
            for k in 0..d {
                x[k] = (centre[k] - width + idx[k] as f64 * h).clamp(-half[k], half[k]);
            }
            let v = eval(&x);
            if v < best_v {
                best_v = v;
                best_x.copy_from_slice(&x);
            }
            for slot in idx.iter_mut() {
                *slot += 1;
                if *slot < ZOOM_POINTS {
                    continue 'cell;
                }
                *slot = 0;
            }
            break;
        }
        width *= 0.5;
        if width < 1e-15 {
            break;
        }
    }
    (best_v, best_x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::{make_function, FunctionId};

    fn f(id: FunctionId) -> ObjectiveFunction<f64> {
        make_function(id, None).unwrap()
    }

    #[test]
    fn matyas() {
        let (v, x) = oracle_minimum(&f(FunctionId::F7), 0.01).unwrap();
        assert!(v.abs() < 1e-10, "{v:e}");
        assert!(x.iter().all(|c| c.abs() < 1e-3), "{x:?}");
    }

    #[test]
    fn schaffer_n2_coarse_then_refined() {
        let (v, x) = oracle_minimum(&f(FunctionId::F10), 0.05).unwrap();
        assert!(v.abs() < 1e-10, "{v:e}");
        assert!(x.iter().all(|c| c.abs() < 1e-3), "{x:?}");
    }

    #[test]
    fn goldstein_price() {
        let (v, x) = oracle_minimum(&f(FunctionId::F9), 0.001).unwrap();
        assert!((v - 3.0).abs() < 1e-9, "{v}");
        assert!(x[0].abs() < 1e-3 && (x[1] + 1.0).abs() < 1e-3, "{x:?}");
    }

    #[test]
    fn easom_off_centre() {
        let (v, x) = oracle_minimum(&f(FunctionId::F12), 0.05).unwrap();
        assert!((v + 1.0).abs() < 1e-9, "{v}");
        let pi = std::f64::consts::PI;
        assert!((x[0] - pi).abs() < 1e-3 && (x[1] - pi).abs() < 1e-3);
    }

    #[test]
    fn one_dimensional() {
        let g = make_function::<f64>(FunctionId::F1, Some(1)).unwrap();
        let (v, _) = oracle_minimum(&g, 0.3).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn refusals() {
        assert!(matches!(
            oracle_minimum(&f(FunctionId::F11), 0.1),
            Err(GboError::OracleUnavailable(_))
        ));
        assert!(matches!(
            oracle_minimum(&f(FunctionId::F4), 0.1),
            Err(GboError::OracleUnavailable(_))
        ));
        assert!(oracle_minimum(&f(FunctionId::F1), 0.0).is_err());
    }

    #[test]
    fn axis_has_ends_and_centre() {
        let a = grid_axis(-1.0, 1.0, 0.3);
        assert_eq!(a.first(), Some(&-1.0));
        assert_eq!(a.last(), Some(&1.0));
        assert!(a.contains(&0.0));
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }
}
