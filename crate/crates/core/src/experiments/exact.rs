use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::MatrixF3;
use crate::par::map_chunks;
use crate::permanent::{perm_mod3_words, perm_naive};

/// Largest `n` for which full enumeration is attempted (`3^16` matrices).
pub const MAX_EXACT_N: usize = 4;

/// Exact distribution of `perm(A)` over all `n x n` matrices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactCountResult {
    pub n: usize,
    /// Matrices with permanent 0.
    pub z: u128,
    pub plus_one: u128,
    pub minus_one: u128,
    /// `3^(n^2)`.
    pub total: u128,
    pub ratio: f64,
}

/// Counts matrices by permanent, enumerating every `n x n` trit matrix.
///
/// Rows are enumerated in odometer order over the `3^n` possible rows; the
/// first row indexes the parallel chunks. For `n <= 2` every permanent is
/// cross-checked against the naive expansion.
pub fn exact_zero_count(n: usize) -> Result<ExactCountResult> {
    if n == 0 {
        return Err(Error::EmptyVector);
    }
    if n > MAX_EXACT_N {
        return Err(Error::Infeasible(format!(
            "exact count for n = {n} needs 3^{} permanents; only n <= {MAX_EXACT_N} is supported",
            n * n
        )));
    }

    let row_count = 3usize.pow(n as u32);
    let row_trits: Vec<Vec<i8>> = (0..row_count).map(|code| decode_row(code, n)).collect();
    let row_words: Vec<(u64, u64)> = row_trits
        .iter()
        .map(|r| words_of(r))
        .collect();

    let tallies = map_chunks(row_count, |first| {
        let mut counts = [0u128; 3];
        let mut odometer = vec![0usize; n];
        odometer[0] = first;
        let mut rows: Vec<(u64, u64)> = odometer.iter().map(|&c| row_words[c]).collect();
        loop {
            let p = perm_mod3_words(&rows);
            if n <= 2 {
                let entries = odometer.iter().flat_map(|&c| row_trits[c].iter().copied()).collect();
                let m = MatrixF3::from_trits(n, entries).expect("valid trits");
                assert_eq!(perm_naive(&m).expect("n <= 2"), p, "engine disagreement on {m:?}");
            }
            counts[(p + 1) as usize] += 1;

            // Advance rows 1..n; row 0 is fixed for this chunk.
            let mut k = n - 1;
            loop {
                if k == 0 {
                    return counts;
                }
                odometer[k] += 1;
                if odometer[k] < row_count {
                    rows[k] = row_words[odometer[k]];
                    break;
                }
                odometer[k] = 0;
                rows[k] = row_words[0];
                k -= 1;
            }
        }
    });

    let mut counts = [0u128; 3];
    for t in tallies {
        for (c, v) in counts.iter_mut().zip(t) {
            *c += v;
        }
    }
    let total = 3u128.pow((n * n) as u32);
    debug_assert_eq!(counts.iter().sum::<u128>(), total);
    Ok(ExactCountResult {
        n,
        z: counts[1],
        plus_one: counts[2],
        minus_one: counts[0],
        total,
        ratio: counts[1] as f64 / total as f64,
    })
}

fn decode_row(mut code: usize, n: usize) -> Vec<i8> {
    (0..n)
        .map(|_| {
            let t = (code % 3) as i8;
            code /= 3;
            if t == 2 {
                -1
            } else {
                t
            }
        })
        .collect()
}

fn words_of(row: &[i8]) -> (u64, u64) {
    row.iter().fold((0, 0), |(m, s), &t| ((m << 1) | (t != 0) as u64, (s << 1) | (t == -1) as u64))
}
