//! Binary-coded genetic algorithm: Gray-coded genes, tournament selection,
//! two-point crossover, bit-flip mutation and one elite carried over.

use gbo_core::{GboError, Objective, Record, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::tracker::Tracker;

const TOURNAMENT: usize = 2;
const MAX_BITS: u32 = 62;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GaConfig {
    pub size_pop: usize,
    /// Generations, the initial population counting as the first.
    pub max_iter: usize,
    /// Per-bit flip probability.
    pub prob_mut: f64,
    /// Target resolution of the decoded coordinates; sets the gene length.
    pub precision: f64,
    pub bounds: Option<Bounds>,
    pub seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            size_pop: 50,
            max_iter: 200,
            prob_mut: 0.001,
            precision: 1e-7,
            bounds: None,
            seed: 0,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        crate::check_population(self.size_pop, self.max_iter)?;
        crate::check_probability("prob_mut", self.prob_mut)?;
        if !(self.precision.is_finite() && self.precision > 0.0) {
            return Err(GboError::InvalidConfig(format!(
                "precision must be positive, got {}",
                self.precision
            )));
        }
        Ok(())
    }
}

/// Bits needed so adjacent codes are at most `precision` apart.
pub fn gene_bits(width: f64, precision: f64) -> u32 {
    let steps = (width / precision).ceil().max(1.0);
    (steps + 1.0).log2().ceil().clamp(1.0, MAX_BITS as f64) as u32
}

struct Codec {
    bits: Vec<u32>,
    offsets: Vec<usize>,
    len: usize,
}

impl Codec {
    fn new(bounds: &Bounds, precision: f64) -> Self {
        let bits: Vec<u32> = (0..bounds.dimension())
            .map(|i| gene_bits(bounds.width(i), precision))
            .collect();
        let mut offsets = Vec::with_capacity(bits.len());
        let mut len = 0;
        for b in &bits {
            offsets.push(len);
            len += *b as usize;
        }
        Self { bits, offsets, len }
    }

    fn decode(&self, genome: &[bool], bounds: &Bounds, out: &mut [f64]) {
        for (i, x) in out.iter_mut().enumerate() {
            let gene = &genome[self.offsets[i]..self.offsets[i] + self.bits[i] as usize];
            // Gray to binary, most significant bit first
            let mut acc = 0u64;
            let mut bit = false;
            for g in gene {
                bit ^= *g;
                acc = (acc << 1) | bit as u64;
            }
            let top = ((1u64 << self.bits[i]) - 1) as f64;
            *x = (bounds.lb[i] + bounds.width(i) * (acc as f64 / top)).clamp(bounds.lb[i], bounds.ub[i]);
        }
    }
}

pub fn ga_optimize(f: &impl Objective<f64>, config: &GaConfig) -> Result<Record> {
    config.validate()?;
    let bounds = Bounds::resolve(config.bounds.as_ref(), f)?;
    let d = bounds.dimension();
    let n = config.size_pop;
    let codec = Codec::new(&bounds, config.precision);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut track = Tracker::new(f);
    let mut x = vec![0.0; d];

    let mut pop: Vec<Vec<bool>> = (0..n).map(|_| (0..codec.len).map(|_| rng.gen()).collect()).collect();
    let mut fit = Vec::with_capacity(n);
    for g in &pop {
        codec.decode(g, &bounds, &mut x);
        fit.push(track.eval(&x)?);
    }
    track.end_round(n);

    for _ in 1..config.max_iter {
        let elite = crate::pso::argmin(&fit);
        let (elite_genome, elite_fit) = (pop[elite].clone(), fit[elite]);

        let mut next: Vec<Vec<bool>> = (0..n)
            .map(|_| {
                let mut winner = rng.gen_range(0..n);
                for _ in 1..TOURNAMENT {
                    let rival = rng.gen_range(0..n);
                    if fit[rival] < fit[winner] {
                        winner = rival;
                    }
                }
                pop[winner].clone()
            })
            .collect();
        for pair in next.chunks_exact_mut(2) {
            let (a, b) = pair.split_at_mut(1);
            let mut cut = [rng.gen_range(0..codec.len), rng.gen_range(0..codec.len)];
            cut.sort_unstable();
            a[0][cut[0]..cut[1]].swap_with_slice(&mut b[0][cut[0]..cut[1]]);
        }
        for genome in &mut next {
            for bit in genome.iter_mut() {
                if rng.gen::<f64>() < config.prob_mut {
                    *bit = !*bit;
                }
            }
        }
        for (k, g) in next.iter().enumerate() {
            codec.decode(g, &bounds, &mut x);
            fit[k] = track.eval(&x)?;
        }
        pop = next;
        let worst = (0..n).fold(0, |w, k| if fit[k] > fit[w] { k } else { w });
        if elite_fit < fit[worst] {
            pop[worst] = elite_genome;
            fit[worst] = elite_fit;
        }
        track.end_round(n);
    }
    Ok(track.finish())
}
