use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::exact::exact_zero_count;
use super::sampling::TritSampler;
use crate::error::{Error, Result};
use crate::gray::MAX_GRAY_BITS;
use crate::par::{map_chunks, split_range};
use crate::permanent::perm_mod3_words;

/// Monte Carlo estimate of `P(perm(A) = 0)` for uniform `A`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McResult {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub zero_count: u64,
    pub p_hat: f64,
    pub stderr: f64,
}

impl McResult {
    fn new(n: usize, trials: u64, seed: u64, zero_count: u64) -> Self {
        let p_hat = zero_count as f64 / trials as f64;
        let stderr = (p_hat * (1.0 - p_hat) / trials as f64).sqrt();
        McResult { n, trials, seed, zero_count, p_hat, stderr }
    }

    /// Distance from `p` in units of the standard error.
    pub fn z_score(&self, p: f64) -> f64 {
        (self.p_hat - p) / self.stderr
    }
}

/// Samples `trials` uniform `n x n` matrices and counts zero permanents.
///
/// Trial `t` draws its matrix from stream `t` of the generator keyed by
/// `seed`, so the tally is a function of `(n, trials, seed)` alone. `jobs`
/// only decides how the trial range is split across workers.
pub fn montecarlo_zero(n: usize, trials: u64, seed: u64, jobs: usize) -> Result<McResult> {
    if n == 0 {
        return Err(Error::EmptyVector);
    }
    if n > MAX_GRAY_BITS {
        return Err(Error::DimensionTooLarge { what: "Monte Carlo permanent", n, max: MAX_GRAY_BITS });
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if jobs == 0 {
        return Err(Error::InvalidArgument("jobs must be at least 1".into()));
    }

    let base = ChaCha8Rng::seed_from_u64(seed);
    let ranges = split_range(0, trials, jobs);
    let zeros = map_chunks(ranges.len(), |k| {
        let (lo, hi) = ranges[k];
        let mut rows = Vec::with_capacity(n);
        let mut zeros = 0u64;
        for t in lo..hi {
            TritSampler::from_keyed(&base, t).fill_rows(n, &mut rows);
            zeros += (perm_mod3_words(&rows) == 0) as u64;
        }
        zeros
    });
    Ok(McResult::new(n, trials, seed, zeros.into_iter().sum()))
}

/// One point of the zero-probability curve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesPoint {
    pub n: usize,
    /// `exact` or `montecarlo`.
    pub source: &'static str,
    pub p: f64,
    /// Zero for exact points.
    pub stderr: f64,
    /// Matrices counted: `3^(n^2)` for exact points.
    pub samples: f64,
}

/// Zero-probability for `n = 1..=n_max`: exact for `n <= exact_up_to`,
/// sampled above.
pub fn zero_probability_series(
    n_max: usize,
    exact_up_to: usize,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<Vec<SeriesPoint>> {
    (1..=n_max)
        .map(|n| {
            if n <= exact_up_to {
                let e = exact_zero_count(n)?;
                Ok(SeriesPoint { n, source: "exact", p: e.ratio, stderr: 0.0, samples: e.total as f64 })
            } else {
                let mc = montecarlo_zero(n, trials, seed, jobs)?;
                Ok(SeriesPoint { n, source: "montecarlo", p: mc.p_hat, stderr: mc.stderr, samples: trials as f64 })
            }
        })
        .collect()
}
