//! Versioned CSV / JSON result records.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use tritperm::experiments::{BenchResult, ExactCountResult, McResult, SeriesPoint};
use tritperm::Method;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    /// One JSON object per line.
    Json,
}

#[derive(Serialize)]
pub struct PermRecord {
    schema: &'static str,
    n: usize,
    method: Method,
    jobs: usize,
    value: i8,
    elapsed_seconds: f64,
}

impl PermRecord {
    pub fn new(n: usize, method: Method, jobs: usize, value: i8, classes: bool, elapsed_seconds: f64) -> Self {
        let value = if classes { value.rem_euclid(3) } else { value };
        PermRecord { schema: "tritperm.perm.v1", n, method, jobs, value, elapsed_seconds }
    }
}

#[derive(Serialize)]
pub struct ExactRecord {
    schema: &'static str,
    n: usize,
    z: u128,
    plus_one: u128,
    minus_one: u128,
    total: u128,
    ratio: f64,
}

impl From<&ExactCountResult> for ExactRecord {
    fn from(r: &ExactCountResult) -> Self {
        ExactRecord {
            schema: "tritperm.exact.v1",
            n: r.n,
            z: r.z,
            plus_one: r.plus_one,
            minus_one: r.minus_one,
            total: r.total,
            ratio: r.ratio,
        }
    }
}

#[derive(Serialize)]
pub struct McRecord {
    schema: &'static str,
    n: usize,
    trials: u64,
    seed: u64,
    zero_count: u64,
    p_hat: f64,
    stderr: f64,
}

impl From<&McResult> for McRecord {
    fn from(r: &McResult) -> Self {
        McRecord {
            schema: "tritperm.montecarlo.v1",
            n: r.n,
            trials: r.trials,
            seed: r.seed,
            zero_count: r.zero_count,
            p_hat: r.p_hat,
            stderr: r.stderr,
        }
    }
}

#[derive(Serialize)]
pub struct SeriesRecord {
    schema: &'static str,
    n: usize,
    source: &'static str,
    p: f64,
    stderr: f64,
    samples: f64,
}

impl From<&SeriesPoint> for SeriesRecord {
    fn from(p: &SeriesPoint) -> Self {
        SeriesRecord {
            schema: "tritperm.zero_probability.v1",
            n: p.n,
            source: p.source,
            p: p.p,
            stderr: p.stderr,
            samples: p.samples,
        }
    }
}

#[derive(Serialize)]
pub struct BenchRecord {
    schema: &'static str,
    method: Method,
    model: &'static str,
    n: usize,
    reps: usize,
    mean_seconds: f64,
    median_seconds: f64,
    min_seconds: f64,
    relative_residual: f64,
    constant: f64,
}

impl BenchRecord {
    pub fn rows(r: &BenchResult) -> Vec<BenchRecord> {
        r.rows
            .iter()
            .map(|row| BenchRecord {
                schema: "tritperm.bench.v1",
                method: r.method,
                model: r.model_name,
                n: row.n,
                reps: row.reps,
                mean_seconds: row.mean_seconds,
                median_seconds: row.median_seconds,
                min_seconds: row.min_seconds,
                relative_residual: row.relative_residual,
                constant: r.constant,
            })
            .collect()
    }
}

fn render<T: Serialize>(records: &[T], format: Format, header: bool) -> Result<Vec<u8>> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(header).from_writer(Vec::new());
            for r in records {
                w.serialize(r)?;
            }
            Ok(w.into_inner().context("flushing CSV")?)
        }
        Format::Json => {
            let mut buf = Vec::new();
            for r in records {
                serde_json::to_writer(&mut buf, r)?;
                buf.push(b'\n');
            }
            Ok(buf)
        }
    }
}

/// Prints records to stdout and, if `append_to` is given, appends them to
/// that file. A CSV header is written only when the file is new or empty.
pub fn emit<T: Serialize>(records: &[T], format: Format, append_to: Option<&Path>) -> Result<()> {
    std::io::stdout().write_all(&render(records, format, true)?)?;
    if let Some(path) = append_to {
        let fresh = std::fs::metadata(path).map_or(true, |m| m.len() == 0);
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("opening {}", path.display()))?;
        file.write_all(&render(records, format, fresh)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
