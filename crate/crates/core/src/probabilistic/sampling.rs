use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{Pfa, Role};
use crate::error::{Error, Result};
use crate::rational::to_f64;

/// Generator used for every sampled run.
pub const MONTE_CARLO_RNG: &str = "ChaCha8Rng";

/// Trials per independent stream. Chunk `i` draws from stream `i` of the
/// seeded generator, so results do not depend on the worker count.
pub const MONTE_CARLO_CHUNK: u64 = 4096;

/// Outcome counts of a sampled run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonteCarlo {
    pub trials: u64,
    pub seed: u64,
    pub rng: &'static str,
    pub accept: u64,
    pub reject: u64,
    pub neutral: u64,
}

impl MonteCarlo {
    pub fn accept_frequency(&self) -> f64 {
        self.accept as f64 / self.trials as f64
    }

    pub fn reject_frequency(&self) -> f64 {
        self.reject as f64 / self.trials as f64
    }

    pub fn neutral_frequency(&self) -> f64 {
        self.neutral as f64 / self.trials as f64
    }
}

/// Samples `trials` runs of `pfa` on `word`. Deterministic given `seed`.
pub fn monte_carlo(pfa: &Pfa, word: &str, trials: u64, seed: u64) -> Result<MonteCarlo> {
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is needed".into()));
    }
    let encoded = pfa.alphabet().encode(word)?;
    let sigma = pfa.alphabet().len();
    // samplers[q * |Σ| + a]: targets and their weights
    let samplers: Vec<Option<(Vec<usize>, WeightedIndex<f64>)>> = (0..pfa.state_count())
        .flat_map(|q| (0..sigma).map(move |a| (q, a)))
        .map(|(q, a)| {
            let row = pfa.row(q, a);
            let targets: Vec<usize> = row.iter().map(|(t, _)| *t).collect();
            let weights: Vec<f64> = row.iter().map(|(_, p)| to_f64(p)).collect();
            WeightedIndex::new(weights).ok().map(|w| (targets, w))
        })
        .collect();
    let chunks = trials.div_ceil(MONTE_CARLO_CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let size = MONTE_CARLO_CHUNK.min(trials - chunk * MONTE_CARLO_CHUNK);
            let mut counts = [0u64; 3];
            for _ in 0..size {
                let mut q = pfa.initial();
                let mut blocked = false;
                for &a in &encoded {
                    match &samplers[q * sigma + a] {
                        Some((targets, dist)) => q = targets[dist.sample(&mut rng)],
                        None => {
                            blocked = true;
                            break;
                        }
                    }
                }
                let slot = match (blocked, pfa.role(q)) {
                    (true, _) | (false, Role::Neutral) => 2,
                    (false, Role::Accepting) => 0,
                    (false, Role::Rejecting) => 1,
                };
                counts[slot] += 1;
            }
            counts
        })
        .reduce(|| [0; 3], |x, y| [x[0] + y[0], x[1] + y[1], x[2] + y[2]]);
    Ok(MonteCarlo {
        trials,
        seed,
        rng: MONTE_CARLO_RNG,
        accept: counts[0],
        reject: counts[1],
        neutral: counts[2],
    })
}
