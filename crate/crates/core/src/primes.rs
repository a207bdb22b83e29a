//! Prime radii for concentric shells.

use crate::scalar::Scalar;

/// Primes `p` with `0 < p < r`, ascending. Empty when `r <= 2`.
pub fn primes_below<T: Scalar>(r: T) -> Vec<u64> {
    PrimeTable::covering(r).below(r).to_vec()
}

/// Sieve of Eratosthenes up to a fixed limit, queried by strict upper bound.
#[derive(Debug, Clone, Default)]
pub struct PrimeTable {
    primes: Vec<u64>,
    limit: u64,
}

impl PrimeTable {
    /// All primes strictly below `limit`.
    pub fn new(limit: u64) -> Self {
        let n = limit as usize;
        if n < 3 {
            return Self {
                primes: Vec::new(),
                limit,
            };
        }
        let mut composite = vec![false; n];
        let mut primes = Vec::new();
        for i in 2..n {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
        Self { primes, limit }
    }

    /// Table large enough to answer [`PrimeTable::below`] for every radius up to `r`.
    pub fn covering<T: Scalar>(r: T) -> Self {
        match r.ceil().to_u64() {
            Some(limit) if r > T::zero() => Self::new(limit),
            _ => Self::default(),
        }
    }

    /// Whether every prime below `r` is in the table.
    pub fn covers<T: Scalar>(&self, r: T) -> bool {
        r.ceil().to_u64().is_some_and(|need| need <= self.limit)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Prefix of the table holding the primes strictly below `r`.
    pub fn below<T: Scalar>(&self, r: T) -> &[u64] {
        let n = self.primes.partition_point(|&p| T::from_u64(p).is_some_and(|p| p < r));
        &self.primes[..n]
    }
}
