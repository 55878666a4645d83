use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::MatrixF3;

/// Uniform trits from a counter-based stream.
///
/// Stream `index` under master `seed` is ChaCha8 keyed by `seed` with its
/// 64-bit stream id set to `index`, so any trial can be regenerated without
/// touching the others. Trits are drawn two bits at a time; the pattern `11`
/// is rejected, leaving `00 -> 0`, `01 -> 1`, `10 -> -1` equally likely.
pub struct TritSampler {
    rng: ChaCha8Rng,
    word: u64,
    left: u32,
}

impl TritSampler {
    pub fn new(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        TritSampler { rng, word: 0, left: 0 }
    }

    /// Reuses an already-keyed generator for a different stream.
    pub(crate) fn from_keyed(base: &ChaCha8Rng, index: u64) -> Self {
        let mut rng = base.clone();
        rng.set_stream(index);
        rng.set_word_pos(0);
        TritSampler { rng, word: 0, left: 0 }
    }

    #[inline]
    fn two_bits(&mut self) -> u64 {
        if self.left == 0 {
            self.word = self.rng.next_u64();
            self.left = 32;
        }
        let v = self.word & 3;
        self.word >>= 2;
        self.left -= 1;
        v
    }

    /// `(is_nonzero, is_negative)` of one uniform trit.
    #[inline]
    fn next_bits(&mut self) -> (u64, u64) {
        loop {
            match self.two_bits() {
                0 => return (0, 0),
                1 => return (1, 0),
                2 => return (1, 1),
                _ => continue,
            }
        }
    }

    pub fn next_trit(&mut self) -> i8 {
        match self.next_bits() {
            (0, _) => 0,
            (_, 0) => 1,
            _ => -1,
        }
    }

    /// Fills `rows` with `n` uniformly random single-word bipedal rows.
    /// Entries are drawn row-major, first column first.
    pub fn fill_rows(&mut self, n: usize, rows: &mut Vec<(u64, u64)>) {
        debug_assert!(n <= 64);
        rows.clear();
        for _ in 0..n {
            let (mut mag, mut sgn) = (0u64, 0u64);
            for _ in 0..n {
                let (m, s) = self.next_bits();
                mag = (mag << 1) | m;
                sgn = (sgn << 1) | s;
            }
            rows.push((mag, sgn));
        }
    }

    /// Random matrix with the same draw order as [`TritSampler::fill_rows`].
    pub fn matrix(&mut self, n: usize) -> MatrixF3 {
        let e = (0..n * n).map(|_| self.next_trit()).collect();
        MatrixF3::from_trits(n, e).expect("n >= 1")
    }
}
