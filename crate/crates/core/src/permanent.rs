//! Permanent engines over GF(3).
//!
//! * [`perm_naive`]: sum over all permutations. Ground truth for small `n`.
//! * [`perm_ryser_reference`]: Gray-coded Ryser on an integer subset-sum
//!   vector, reduced mod 3 after every step.
//! * [`perm_mod3_fast`]: the same walk on bipedal words. Each step costs one
//!   add or subtract (6 word ops) and one compare against the all-ones mask;
//!   only steps whose row sum has no zero entry touch the accumulator.
//! * [`perm_chunk`] / [`perm_mod3_parallel`]: the fast walk restricted to a
//!   contiguous block of Gray steps, and a fork-join over such blocks.
//!
//! Ryser's formula gives
//! `perm(A) = (-1)^n * sum_i (-1)^(i & 1) * prod(row sum of subset gray(i))`,
//! where the parity of `|gray(i)|` equals the parity of `i`.

use crate::error::{Error, Result};
use crate::f3::{add_words, sub_words, word_mask, BipedalVec};
pub use crate::f3::cmod3;
use crate::gray::{jump, Direction, GrayCursor, MAX_GRAY_BITS};
use crate::matrix::MatrixF3;
use crate::par::{map_chunks, split_range};

/// Largest `n` accepted by [`perm_naive`].
pub const MAX_NAIVE_N: usize = 9;

/// Partial Ryser sum over Gray steps `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkResult {
    pub lo: u64,
    pub hi: u64,
    /// Sum of `(-1)^(popcount(sgn) + (i & 1))` over full-magnitude steps `i`.
    pub partial_sum: i64,
}

/// Which engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Naive,
    Ryser,
    Mod3,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Ryser => "ryser",
            Method::Mod3 => "mod3",
        }
    }

    /// Runs the engine. `jobs > 1` selects the chunked parallel path for
    /// [`Method::Mod3`] and is ignored otherwise.
    pub fn run(self, a: &MatrixF3, jobs: usize) -> Result<i8> {
        match self {
            Method::Naive => perm_naive(a),
            Method::Ryser => perm_ryser_reference(a),
            Method::Mod3 if jobs > 1 => perm_mod3_parallel(a, jobs),
            Method::Mod3 => perm_mod3_fast(a),
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "ryser" => Ok(Method::Ryser),
            "mod3" => Ok(Method::Mod3),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?} (expected naive, ryser or mod3)"))),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[inline]
fn sign_of_n(n: usize) -> i128 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_gray_width(n: usize, what: &'static str) -> Result<()> {
    if n > MAX_GRAY_BITS {
        return Err(Error::DimensionTooLarge { what, n, max: MAX_GRAY_BITS });
    }
    Ok(())
}

/// Permanent by direct expansion over all `n!` permutations.
pub fn perm_naive(a: &MatrixF3) -> Result<i8> {
    let n = a.n();
    if n > MAX_NAIVE_N {
        return Err(Error::DimensionTooLarge { what: "naive permanent", n, max: MAX_NAIVE_N });
    }

    // Depth-first over rows, choosing an unused column each time.
    fn expand(a: &MatrixF3, row: usize, used: u32, acc: i64) -> i64 {
        if row == a.n() {
            return acc;
        }
        let mut total = 0;
        for col in 0..a.n() {
            let v = a.get(row, col);
            if used & (1 << col) == 0 && v != 0 {
                total += expand(a, row + 1, used | (1 << col), acc * v as i64);
            }
        }
        total
    }

    Ok(cmod3(expand(a, 0, 0, 1) as i128))
}

/// Gray-coded Ryser on an integer subset-sum vector.
pub fn perm_ryser_reference(a: &MatrixF3) -> Result<i8> {
    let n = a.n();
    check_gray_width(n, "Ryser reference")?;
    let mut cursor = GrayCursor::new(n)?;
    let mut v = vec![0i64; n];
    let mut s: i128 = 0;
    while let Some(flip) = cursor.advance() {
        let row = a.row(flip.bit as usize);
        match flip.direction {
            Direction::Enter => v.iter_mut().zip(row).for_each(|(x, &r)| *x += r as i64),
            Direction::Leave => v.iter_mut().zip(row).for_each(|(x, &r)| *x -= r as i64),
        }
        for x in v.iter_mut() {
            *x = cmod3(*x as i128) as i64;
        }
        let prod: i64 = v.iter().product();
        if cursor.step() & 1 == 1 {
            s -= prod as i128;
        } else {
            s += prod as i128;
        }
    }
    Ok(cmod3(s * sign_of_n(n)))
}

/// Bitsliced Gray-coded Ryser on one thread.
pub fn perm_mod3_fast(a: &MatrixF3) -> Result<i8> {
    let n = a.n();
    check_gray_width(n, "mod-3 permanent")?;
    let words = a.row_words().expect("n <= 63 fits one word");
    let s = ryser_steps(&words, 1, 1u64 << n);
    Ok(cmod3(s as i128 * sign_of_n(n)))
}

/// Partial Ryser sum over Gray steps `[lo, hi)` for the matrix with the
/// given bipedal rows.
pub fn perm_chunk(rows: &[BipedalVec], lo: u64, hi: u64) -> Result<ChunkResult> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyVector);
    }
    check_gray_width(n, "Gray chunk")?;
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::LengthMismatch { left: bad.len(), right: n });
    }
    let end = 1u64 << n;
    if lo < 1 || lo > hi || hi > end {
        return Err(Error::RangeOutOfBounds { lo, hi, end });
    }
    let words: Vec<(u64, u64)> = rows.iter().map(BipedalVec::words).collect();
    Ok(ChunkResult { lo, hi, partial_sum: ryser_steps(&words, lo, hi) })
}

/// Splits the Gray walk into `jobs` contiguous blocks, evaluates them
/// concurrently and combines the partial sums. The result does not depend on
/// `jobs` or on scheduling.
pub fn perm_mod3_parallel(a: &MatrixF3, jobs: usize) -> Result<i8> {
    if jobs == 0 {
        return Err(Error::InvalidArgument("jobs must be at least 1".into()));
    }
    let n = a.n();
    check_gray_width(n, "mod-3 permanent")?;
    let words = a.row_words().expect("n <= 63 fits one word");
    let ranges = split_range(1, 1u64 << n, jobs);
    let partials = map_chunks(ranges.len(), |k| {
        let (lo, hi) = ranges[k];
        ryser_steps(&words, lo, hi)
    });
    let total: i128 = partials.into_iter().map(i128::from).sum();
    Ok(cmod3(total * sign_of_n(n)))
}

/// Permanent of a matrix given as single-word bipedal rows (`n <= 63`).
/// Used by the enumeration and sampling drivers, which never build a
/// [`MatrixF3`].
#[inline]
pub fn perm_mod3_words(rows: &[(u64, u64)]) -> i8 {
    let n = rows.len();
    debug_assert!((1..=MAX_GRAY_BITS).contains(&n));
    let s = ryser_steps(rows, 1, 1u64 << n);
    cmod3(s as i128 * sign_of_n(n))
}

/// Hot loop: walk Gray steps `[lo, hi)` over `rows.len()` single-word rows.
///
/// The row sum is seeded with the subset `gray(lo - 1)`. The `(i & 1)` sign
/// depends only on the global step, so blocks need no fix-up when combined.
/// `|result| <= hi - lo < 2^63`.
fn ryser_steps(rows: &[(u64, u64)], lo: u64, hi: u64) -> i64 {
    let n = rows.len();
    let mask = word_mask(n);

    // Fixed-size table lets `t & 63` index without a bounds check.
    let mut table = [(0u64, 0u64); 64];
    table[..n].copy_from_slice(rows);

    let mut x = jump(lo - 1);
    let (mut mag, mut sgn) = (0u64, 0u64);
    let mut bits = x;
    while bits != 0 {
        let t = bits.trailing_zeros() as usize;
        (mag, sgn) = add_words(mag, sgn, table[t].0, table[t].1);
        bits &= bits - 1;
    }

    let mut s: i64 = 0;
    for i in lo..hi {
        let t = i.trailing_zeros() as usize & 63;
        let (rm, rs) = table[t];
        (mag, sgn) = if (x >> t) & 1 == 1 {
            sub_words(mag, sgn, rm, rs)
        } else {
            add_words(mag, sgn, rm, rs)
        };
        x ^= 1 << t;
        if mag == mask {
            // +1 when popcount(sgn) + i is even.
            s += 1 - 2 * (((sgn.count_ones() as u64) ^ i) & 1) as i64;
        }
    }
    s
}
