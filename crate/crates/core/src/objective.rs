use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::SearchDomain;
use crate::scalar::Scalar;

/// A black-box function to minimize over a symmetric box.
pub trait Objective<T: Scalar> {
    fn domain(&self) -> &SearchDomain<T>;

    /// Raw function value at `x`. `x.len()` equals the domain dimension.
    fn value(&self, x: &[T]) -> T;

    fn dimension(&self) -> usize {
        self.domain().dimension()
    }
}

impl<T: Scalar, O: Objective<T> + ?Sized> Objective<T> for &O {
    fn domain(&self) -> &SearchDomain<T> {
        (**self).domain()
    }

    fn value(&self, x: &[T]) -> T {
        (**self).value(x)
    }
}

/// Adapts a closure into an [`Objective`].
pub struct FnObjective<T: Scalar, F> {
    domain: SearchDomain<T>,
    f: F,
}

impl<T: Scalar, F: Fn(&[T]) -> T> FnObjective<T, F> {
    pub fn new(domain: SearchDomain<T>, f: F) -> Self {
        Self { domain, f }
    }
}

impl<T: Scalar, F: Fn(&[T]) -> T> Objective<T> for FnObjective<T, F> {
    fn domain(&self) -> &SearchDomain<T> {
        &self.domain
    }

    fn value(&self, x: &[T]) -> T {
        (self.f)(x)
    }
}

/// Uniform `[0, 1)` noise keyed by `(seed, exact point)`: the same point
/// always draws the same value under the same seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointNoise {
    seed: u64,
}

impl PointNoise {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn draw<T: Scalar>(&self, x: &[T]) -> T {
        let mut key = self.seed ^ 0x9e37_79b9_7f4a_7c15;
        for c in x {
            key = mix64(key ^ c.key_bits());
        }
        let u: f64 = ChaCha8Rng::seed_from_u64(key).gen();
        T::lit(u)
    }
}

// splitmix64 finalizer
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
