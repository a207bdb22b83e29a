//! Registry of the twenty benchmark objectives, with their boxes, default
//! dimensions and known optima.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domain::SearchDomain;
use crate::error::{GboError, Result};
use crate::objective::{Objective, PointNoise};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FunctionId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
}

use FunctionId::*;

/// How many coordinates a function takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionRule {
    Fixed(usize),
    /// Any dimension from `min` up, defaulting to 2.
    Variable {
        min: usize,
    },
}

impl FunctionId {
    pub const ALL: [FunctionId; 20] = [
        F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15, F16, F17, F18, F19, F20,
    ];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            F1 => "Sphere Model",
            F2 => "Schwefel's Problem 1.2",
            F3 => "Generalized Rosenbrock's Function",
            F4 => "Quartic Function i.e. Noise",
            F5 => "Drop-Wave Function",
            F6 => "Levy Function N. 13",
            F7 => "Matyas Function",
            F8 => "Three-Hump Camel Function",
            F9 => "Goldstein-Price Function",
            F10 => "Schaffer Function N. 2",
            F11 => "Generalized Rastrigin's Function",
            F12 => "Easom Function",
            F13 => "Sum of Different Powers Function",
            F14 => "Rastrigin Function",
            F15 => "Sum Squares Function",
            F16 => "Generalized Griewank's Function",
            F17 => "Rotated Hyper-Ellipsoid Function",
            F18 => "Bohachevsky Function1",
            F19 => "Bohachevsky Function2",
            F20 => "Bohachevsky Function3",
        }
    }

    pub fn halfwidth(self) -> f64 {
        match self {
            F1 | F2 | F10 | F12 | F18 | F19 | F20 => 100.0,
            F3 => 30.0,
            F4 => 1.28,
            F5 | F11 | F14 => 5.12,
            F6 | F7 | F8 | F15 => 10.0,
            F9 => 2.0,
            F13 => 1.0,
            F16 => 600.0,
            F17 => 65.536,
        }
    }

    pub fn dimension_rule(self) -> DimensionRule {
        match self {
            F11 | F16 => DimensionRule::Fixed(30),
            F5 | F6 | F7 | F8 | F9 | F10 | F12 | F18 | F19 | F20 => DimensionRule::Fixed(2),
            F3 => DimensionRule::Variable { min: 2 },
            F1 | F2 | F4 | F13 | F14 | F15 | F17 => DimensionRule::Variable { min: 1 },
        }
    }

    pub fn default_dimension(self) -> usize {
        match self.dimension_rule() {
            DimensionRule::Fixed(d) => d,
            DimensionRule::Variable { .. } => 2,
        }
    }

    pub fn optimum_value(self) -> f64 {
        match self {
            F5 | F12 => -1.0,
            F9 => 3.0,
            _ => 0.0,
        }
    }

    pub fn is_deterministic(self) -> bool {
        self != F4
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.index())
    }
}

impl FromStr for FunctionId {
    type Err = GboError;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        trimmed
            .strip_prefix(['f', 'F'])
            .and_then(|n| n.parse::<usize>().ok())
            .and_then(|n| n.checked_sub(1))
            .and_then(|i| Self::ALL.get(i).copied())
            .or_else(|| {
                Self::ALL
                    .iter()
                    .copied()
                    .find(|id| id.name().eq_ignore_ascii_case(trimmed))
            })
            .ok_or_else(|| GboError::UnknownFunction(s.to_string()))
    }
}

impl TryFrom<String> for FunctionId {
    type Error = GboError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FunctionId> for String {
    fn from(id: FunctionId) -> String {
        id.to_string()
    }
}

/// A benchmark objective configured at a concrete dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveFunction<T: Scalar> {
    id: FunctionId,
    domain: SearchDomain<T>,
    optimum_point: Vec<T>,
}

/// Builds benchmark `id`, at its default dimension unless `dimension` overrides it.
pub fn make_function<T: Scalar>(id: FunctionId, dimension: Option<usize>) -> Result<ObjectiveFunction<T>> {
    let d = match (id.dimension_rule(), dimension) {
        (_, None) => id.default_dimension(),
        (DimensionRule::Fixed(fixed), Some(d)) if d != fixed => {
            return Err(GboError::IllegalDimension {
                id: id.to_string(),
                dimension: d,
                reason: format!("dimension is fixed at {fixed}"),
            })
        }
        (DimensionRule::Variable { min }, Some(d)) if d < min => {
            return Err(GboError::IllegalDimension {
                id: id.to_string(),
                dimension: d,
                reason: format!("needs at least {min} coordinates"),
            })
        }
        (_, Some(d)) => d,
    };
    let domain = SearchDomain::uniform(T::lit(id.halfwidth()), d)?;
    let optimum_point = match id {
        F3 => vec![T::one(); d],
        F6 => vec![T::one(), T::one()],
        F9 => vec![T::zero(), -T::one()],
        F12 => vec![T::PI(), T::PI()],
        _ => vec![T::zero(); d],
    };
    Ok(ObjectiveFunction {
        id,
        domain,
        optimum_point,
    })
}

impl<T: Scalar> ObjectiveFunction<T> {
    pub fn id(&self) -> FunctionId {
        self.id
    }

    pub fn name(&self) -> &'static str {
        self.id.name()
    }

    pub fn domain(&self) -> &SearchDomain<T> {
        &self.domain
    }

    pub fn dimension(&self) -> usize {
        self.domain.dimension()
    }

    pub fn optimum_value(&self) -> T {
        T::lit(self.id.optimum_value())
    }

    pub fn optimum_point(&self) -> &[T] {
        &self.optimum_point
    }

    pub fn is_deterministic(&self) -> bool {
        self.id.is_deterministic()
    }

    /// Formula value at `x`; the noisy quartic adds one keyed uniform draw
    /// when `noise` is given.
    pub fn evaluate(&self, x: &[T], noise: Option<&PointNoise>) -> Result<T> {
        self.domain.check_point(x)?;
        let base = formula(self.id, x);
        Ok(match (self.id, noise) {
            (F4, Some(n)) => base + n.draw(x),
            _ => base,
        })
    }

    /// View of this function that draws its noise from `seed`.
    pub fn with_noise(&self, seed: u64) -> Seeded<'_, T> {
        Seeded {
            f: self,
            noise: PointNoise::new(seed),
        }
    }
}

/// Noise-free view: the quartic is evaluated without its random term.
impl<T: Scalar> Objective<T> for ObjectiveFunction<T> {
    fn domain(&self) -> &SearchDomain<T> {
        &self.domain
    }

    fn value(&self, x: &[T]) -> T {
        formula(self.id, x)
    }
}

/// A benchmark paired with a noise seed.
#[derive(Debug, Clone, Copy)]
pub struct Seeded<'a, T: Scalar> {
    f: &'a ObjectiveFunction<T>,
    noise: PointNoise,
}

impl<T: Scalar> Seeded<'_, T> {
    pub fn function(&self) -> &ObjectiveFunction<T> {
        self.f
    }
}

impl<T: Scalar> Objective<T> for Seeded<'_, T> {
    fn domain(&self) -> &SearchDomain<T> {
        &self.f.domain
    }

    fn value(&self, x: &[T]) -> T {
        let base = formula(self.f.id, x);
        if self.f.id == F4 {
            base + self.noise.draw(x)
        } else {
            base
        }
    }
}

fn sq<T: Scalar>(v: T) -> T {
    v * v
}

fn formula<T: Scalar>(id: FunctionId, x: &[T]) -> T {
    let c = T::lit;
    let pi = T::PI();
    let zero = T::zero();
    let one = T::one();
    let ith = |i: usize| T::from_usize(i).expect("index fits the scalar");
    match id {
        F1 => x.iter().fold(zero, |s, v| s + sq(*v)),
        F2 => {
            let mut prefix = zero;
            x.iter().fold(zero, |s, v| {
                prefix = prefix + *v;
                s + sq(prefix)
            })
        }
        F3 => x
            .windows(2)
            .fold(zero, |s, w| s + c(100.0) * sq(w[1] - sq(w[0])) + sq(w[0] - one)),
        F4 => x.iter().enumerate().fold(zero, |s, (i, v)| s + ith(i + 1) * sq(sq(*v))),
        F5 => {
            let r2 = sq(x[0]) + sq(x[1]);
            -(one + (c(12.0) * r2.sqrt()).cos()) / (c(0.5) * r2 + c(2.0))
        }
        F6 => {
            sq((c(3.0) * pi * x[0]).sin())
                + sq(x[0] - one) * (one + sq((c(3.0) * pi * x[1]).sin()))
                + sq(x[1] - one) * (one + sq((c(2.0) * pi * x[1]).sin()))
        }
        F7 => c(0.26) * (sq(x[0]) + sq(x[1])) - c(0.48) * x[0] * x[1],
        F8 => c(2.0) * sq(x[0]) - c(1.05) * x[0].powi(4) + x[0].powi(6) / c(6.0) + x[0] * x[1] + sq(x[1]),
        F9 => {
            let (a, b) = (x[0], x[1]);
            (one + sq(a + b + one)
                * (c(19.0) - c(14.0) * a + c(3.0) * sq(a) - c(14.0) * b + c(6.0) * a * b + c(3.0) * sq(b)))
                * (c(30.0)
                    + sq(c(2.0) * a - c(3.0) * b)
                        * (c(18.0) - c(32.0) * a + c(12.0) * sq(a) + c(48.0) * b - c(36.0) * a * b + c(27.0) * sq(b)))
        }
        F10 => {
            let num = sq((sq(x[0]) - sq(x[1])).sin()) - c(0.5);
            let den = sq(one + c(0.001) * (sq(x[0]) + sq(x[1])));
            c(0.5) + num / den
        }
        F11 => x
            .iter()
            .fold(zero, |s, v| s + (sq(*v) - c(10.0) * (c(2.0) * pi * *v).cos() + c(10.0))),
        F12 => -x[0].cos() * x[1].cos() * (-sq(x[0] - pi) - sq(x[1] - pi)).exp(),
        F13 => x
            .iter()
            .enumerate()
            .fold(zero, |s, (i, v)| s + v.abs().powi(i as i32 + 2)),
        F14 => {
            let d = ith(x.len());
            c(10.0) * d
                + x.iter()
                    .fold(zero, |s, v| s + (sq(*v) - c(10.0) * (c(2.0) * pi * *v).cos()))
        }
        F15 => x.iter().enumerate().fold(zero, |s, (i, v)| s + ith(i + 1) * sq(*v)),
        F16 => {
            let sum = x.iter().fold(zero, |s, v| s + sq(*v));
            let prod = x
                .iter()
                .enumerate()
                .fold(one, |p, (i, v)| p * (*v / ith(i + 1).sqrt()).cos());
            sum / c(4000.0) - prod + one
        }
        F17 => {
            let mut prefix = zero;
            x.iter().fold(zero, |s, v| {
                prefix = prefix + sq(*v);
                s + prefix
            })
        }
        F18 => {
            sq(x[0]) + c(2.0) * sq(x[1]) - c(0.3) * (c(3.0) * pi * x[0]).cos() - c(0.4) * (c(4.0) * pi * x[1]).cos()
                + c(0.7)
        }
        F19 => sq(x[0]) + c(2.0) * sq(x[1]) - c(0.3) * (c(3.0) * pi * x[0]).cos() * (c(4.0) * pi * x[1]).cos() + c(0.3),
        F20 => sq(x[0]) + c(2.0) * sq(x[1]) - c(0.3) * (c(3.0) * pi * x[0] + c(4.0) * pi * x[1]).cos() + c(0.3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f64_fn(id: FunctionId) -> ObjectiveFunction<f64> {
        make_function(id, None).unwrap()
    }

    #[test]
    fn named_optima() {
        assert_eq!(f64_fn(F9).evaluate(&[0.0, -1.0], None).unwrap(), 3.0);
        assert_eq!(f64_fn(F5).evaluate(&[0.0, 0.0], None).unwrap(), -1.0);
        let pi = std::f64::consts::PI;
        assert_eq!(f64_fn(F12).evaluate(&[pi, pi], None).unwrap(), -1.0);
    }

    #[test]
    fn spot_values() {
        assert_eq!(f64_fn(F1).evaluate(&[3.0, 4.0], None).unwrap(), 25.0);
        let levy = f64_fn(F6).evaluate(&[1.0, 1.0], None).unwrap();
        let residual = (3.0 * std::f64::consts::PI).sin().powi(2);
        assert_eq!(levy, residual);
        assert!(levy > 1.3e-31 && levy < 1.4e-31, "{levy:e}");
        let griewank = f64_fn(F16);
        assert_eq!(griewank.dimension(), 30);
        assert_eq!(griewank.evaluate(&[0.0; 30], None).unwrap(), 0.0);
        // hand-computed: f2(1,2) = 1^2 + 3^2, f17(1,2) = 1 + (1 + 4), f15(1,2) = 1 + 8
        assert_eq!(f64_fn(F2).evaluate(&[1.0, 2.0], None).unwrap(), 10.0);
        assert_eq!(f64_fn(F17).evaluate(&[1.0, 2.0], None).unwrap(), 6.0);
        assert_eq!(f64_fn(F15).evaluate(&[1.0, 2.0], None).unwrap(), 9.0);
        assert_eq!(f64_fn(F13).evaluate(&[-0.5, 0.5], None).unwrap(), 0.25 + 0.125);
        assert_eq!(f64_fn(F4).evaluate(&[1.0, -1.0], None).unwrap(), 3.0);
        assert_eq!(f64_fn(F3).evaluate(&[0.0, 0.0], None).unwrap(), 1.0);
    }

    #[test]
    fn every_optimum_is_attained() {
        for id in FunctionId::ALL {
            let f = f64_fn(id);
            let v = f.evaluate(f.optimum_point(), None).unwrap();
            assert!(
                (v - f.optimum_value()).abs() <= 1e-12,
                "{id}: {v:e} vs {}",
                f.optimum_value()
            );
        }
    }

    #[test]
    fn origin_optima_are_exact() {
        for id in [F1, F2, F5, F7, F8, F10, F11, F13, F15, F16, F17, F18, F19, F20, F14] {
            let f = f64_fn(id);
            let v = f.evaluate(&vec![0.0; f.dimension()], None).unwrap();
            assert_eq!(v, f.optimum_value(), "{id}");
        }
    }

    #[test]
    fn dimension_rules() {
        assert!(make_function::<f64>(F9, Some(3)).is_err());
        assert!(make_function::<f64>(F9, Some(2)).is_ok());
        assert!(make_function::<f64>(F16, Some(2)).is_err());
        assert!(make_function::<f64>(F3, Some(1)).is_err());
        assert_eq!(make_function::<f64>(F1, Some(30)).unwrap().dimension(), 30);
        assert_eq!(make_function::<f64>(F1, None).unwrap().dimension(), 2);
        assert_eq!(make_function::<f64>(F11, None).unwrap().dimension(), 30);
        assert!(matches!(
            f64_fn(F1).evaluate(&[1.0], None),
            Err(GboError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ids_parse() {
        assert_eq!("f7".parse::<FunctionId>().unwrap(), F7);
        assert_eq!("F20".parse::<FunctionId>().unwrap(), F20);
        assert_eq!("Easom Function".parse::<FunctionId>().unwrap(), F12);
        assert!("f0".parse::<FunctionId>().is_err());
        assert!("f21".parse::<FunctionId>().is_err());
        assert!("f99".parse::<FunctionId>().is_err());
        for id in FunctionId::ALL {
            assert_eq!(id.to_string().parse::<FunctionId>().unwrap(), id);
        }
    }

    #[test]
    fn noisy_quartic() {
        let f = f64_fn(F4);
        assert_eq!(f.evaluate(&[0.0, 0.0], None).unwrap(), 0.0);
        let n = PointNoise::new(3);
        let a = f.evaluate(&[0.1, 0.2], Some(&n)).unwrap();
        assert_eq!(a, f.evaluate(&[0.1, 0.2], Some(&n)).unwrap());
        let base = f.evaluate(&[0.1, 0.2], None).unwrap();
        assert!(a >= base && a < base + 1.0);
        assert_eq!(f.with_noise(3).value(&[0.1, 0.2]), a);
        // the noise only touches f4
        let g = f64_fn(F1);
        assert_eq!(g.with_noise(3).value(&[0.1, 0.2]), g.value(&[0.1, 0.2]));
    }

    fn point_in(id: FunctionId) -> impl Strategy<Value = Vec<f64>> {
        let a = id.halfwidth();
        prop::collection::vec(-a..=a, id.default_dimension())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sign_flip_symmetry(x in point_in(F1), flip in prop::collection::vec(any::<bool>(), 2)) {
            let flipped: Vec<f64> = x.iter().zip(&flip).map(|(v, f)| if *f { -v } else { *v }).collect();
            for id in [F1, F7, F10, F18, F19, F20] {
                let f = f64_fn(id);
                let a = f.evaluate(&x[..2].iter().map(|v| v * id.halfwidth() / 100.0).collect::<Vec<_>>(), None).unwrap();
                let b = f.evaluate(&flipped[..2].iter().map(|v| v * id.halfwidth() / 100.0).collect::<Vec<_>>(), None).unwrap();
                if id == F7 || id == F20 {
                    // symmetric only under flipping both signs
                    if flip[0] == flip[1] {
                        prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()), "{} {} {}", id, a, b);
                    }
                } else {
                    prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()), "{} {} {}", id, a, b);
                }
            }
        }

        #[test]
        fn evaluators_are_finite_on_their_domains(seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for id in FunctionId::ALL {
                let f = f64_fn(id);
                let a = id.halfwidth();
                let x: Vec<f64> = (0..f.dimension()).map(|_| rng.gen_range(-a..=a)).collect();
                let v = f.evaluate(&x, Some(&PointNoise::new(seed))).unwrap();
                prop_assert!(v.is_finite(), "{} at {:?}", id, x);
                prop_assert!(v >= f.optimum_value() - 1e-9, "{} below its optimum at {:?}", id, x);
            }
        }
    }
}
