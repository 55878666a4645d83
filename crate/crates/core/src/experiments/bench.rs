use std::hint::black_box;
use std::time::Instant;

use serde::Serialize;

use super::sampling::TritSampler;
use crate::error::{Error, Result};
use crate::permanent::Method;

/// Timings for one `(method, n)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub reps: usize,
    pub mean_seconds: f64,
    pub median_seconds: f64,
    pub min_seconds: f64,
    /// Raw timings in round order; entry `r` of every row was taken in the
    /// same round.
    pub samples: Vec<f64>,
    /// Model term: `n * 2^n` for the reference engine, `2^n` for the fast one.
    pub model: f64,
    /// `(mean - c * model) / (c * model)` after fitting `c`.
    pub relative_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchResult {
    pub method: Method,
    pub model_name: &'static str,
    /// Least-squares `c` in `T(n) = c * model(n)`.
    pub constant: f64,
    pub rows: Vec<BenchRow>,
}

impl BenchResult {
    pub fn row(&self, n: usize) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Median over rounds of `T(hi) / T(lo)`, pairing timings from the same
    /// round.
    pub fn paired_ratio(&self, lo: usize, hi: usize) -> Option<f64> {
        let (a, b) = (self.row(lo)?, self.row(hi)?);
        let mut r: Vec<f64> = a.samples.iter().zip(&b.samples).map(|(x, y)| y / x).collect();
        if r.is_empty() {
            return None;
        }
        r.sort_by(f64::total_cmp);
        let m = r.len();
        Some(if m % 2 == 1 { r[m / 2] } else { (r[m / 2 - 1] + r[m / 2]) / 2.0 })
    }
}

fn model(method: Method, n: usize) -> (&'static str, f64) {
    let nf = n as f64;
    match method {
        Method::Naive => ("n*n!", nf * (1..=n).map(|k| k as f64).product::<f64>()),
        Method::Ryser => ("n*2^n", nf * 2f64.powi(n as i32)),
        Method::Mod3 => ("2^n", 2f64.powi(n as i32)),
    }
}

/// `c` minimizing `sum (t_k - c * f_k)^2`.
pub fn fit_constant(points: &[(f64, f64)]) -> f64 {
    let (tf, ff) = points.iter().fold((0.0, 0.0), |(tf, ff), &(f, t)| (tf + t * f, ff + f * f));
    if ff == 0.0 {
        0.0
    } else {
        tf / ff
    }
}

/// Times each method on `reps` random matrices for every `n` in
/// `n_min..=n_max` (single thread), then fits the scaling constant.
///
/// Sizes are timed round-robin (one rep of every `n`, then the next rep), so
/// slow drift in machine speed affects all sizes alike. Each method gets one
/// untimed warm-up pass. `reps = 0` performs no timing and returns nothing.
pub fn bench(methods: &[Method], n_min: usize, n_max: usize, reps: usize, seed: u64) -> Result<Vec<BenchResult>> {
    if reps == 0 {
        return Ok(Vec::new());
    }
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidArgument(format!("bad size range {n_min}..={n_max}")));
    }
    let sizes: Vec<usize> = (n_min..=n_max).collect();
    let mut out = Vec::with_capacity(methods.len());
    for &method in methods {
        for &n in &sizes {
            black_box(method.run(&TritSampler::new(seed, u64::MAX - n as u64).matrix(n), 1)?);
        }
        let mut times = vec![Vec::with_capacity(reps); sizes.len()];
        for rep in 0..reps {
            for (k, &n) in sizes.iter().enumerate() {
                let a = TritSampler::new(seed, ((n as u64) << 32) | rep as u64).matrix(n);
                let start = Instant::now();
                black_box(method.run(black_box(&a), 1)?);
                times[k].push(start.elapsed().as_secs_f64());
            }
        }
        let mut rows: Vec<BenchRow> = sizes
            .iter()
            .zip(&mut times)
            .map(|(&n, samples)| {
                let mut t = samples.clone();
                t.sort_by(f64::total_cmp);
                let median = if reps % 2 == 1 { t[reps / 2] } else { (t[reps / 2 - 1] + t[reps / 2]) / 2.0 };
                BenchRow {
                    n,
                    reps,
                    mean_seconds: t.iter().sum::<f64>() / reps as f64,
                    median_seconds: median,
                    min_seconds: t[0],
                    samples: std::mem::take(samples),
                    model: model(method, n).1,
                    relative_residual: 0.0,
                }
            })
            .collect();
        let constant = fit_constant(&rows.iter().map(|r| (r.model, r.mean_seconds)).collect::<Vec<_>>());
        for r in &mut rows {
            let predicted = constant * r.model;
            r.relative_residual = (r.mean_seconds - predicted) / predicted;
        }
        out.push(BenchResult { method, model_name: model(method, n_min).0, constant, rows });
    }
    Ok(out)
}
