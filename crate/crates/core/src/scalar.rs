//! Scalar abstraction shared by the geometry, the evaluators and the benchmark formulas.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating-point coordinate type: `f32` or `f64`.
///
/// Halving a finite value of either type is exact (barring subnormals), which
/// is what keeps ball radii on the `R0 / 2^k` ladder.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Bit pattern identifying this coordinate exactly. `-0.0` and `+0.0` map
    /// to the same key.
    fn key_bits(self) -> u64;

    /// Converts an `f64` literal into this type (rounding for `f32`).
    fn lit(v: f64) -> Self;

    fn half() -> Self {
        Self::lit(0.5)
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn key_bits(self) -> u64 {
        if self == 0.0 {
            0
        } else {
            u64::from(self.to_bits())
        }
    }

    fn lit(v: f64) -> Self {
        v as f32
    }
}

impl Scalar for f64 {
    fn key_bits(self) -> u64 {
        if self == 0.0 {
            0
        } else {
            self.to_bits()
        }
    }

    fn lit(v: f64) -> Self {
        v
    }
}
