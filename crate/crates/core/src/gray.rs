//! Reflected binary Gray code over subsets of at most 63 rows.
//!
//! Step `i` flips bit `tz(i)`, and the state after step `i` is
//! `i ^ (i >> 1)`, so any position in the walk can be reached directly.

use crate::error::{Error, Result};

/// Largest subset width whose full walk `[0, 2^n)` fits a `u64` step counter.
pub const MAX_GRAY_BITS: usize = 63;

/// Bit flipped when moving from step `i - 1` to step `i`.
#[inline]
pub fn next_flip(i: u64) -> Result<u32> {
    if i == 0 {
        return Err(Error::StepZero);
    }
    Ok(i.trailing_zeros())
}

/// Gray state after `i` steps.
#[inline]
pub const fn jump(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Whether a flipped row joins or leaves the current subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The bit was clear; the row is added.
    Enter,
    /// The bit was set; the row is subtracted.
    Leave,
}

/// One move of a [`GrayCursor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flip {
    /// Row index (0-based) whose membership changed.
    pub bit: u32,
    pub direction: Direction,
}

/// Position in a Gray walk over `n`-element subsets.
///
/// `state == jump(step)` holds at all times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrayCursor {
    n: usize,
    step: u64,
    state: u64,
}

impl GrayCursor {
    /// Cursor at step 0 (the empty subset).
    pub fn new(n: usize) -> Result<Self> {
        GrayCursor::at(n, 0)
    }

    /// Cursor positioned at `step`.
    pub fn at(n: usize, step: u64) -> Result<Self> {
        if n == 0 || n > MAX_GRAY_BITS {
            return Err(Error::DimensionTooLarge { what: "Gray walk", n, max: MAX_GRAY_BITS });
        }
        if step >= 1u64 << n {
            return Err(Error::RangeOutOfBounds { lo: step, hi: step, end: 1u64 << n });
        }
        Ok(GrayCursor { n, step, state: jump(step) })
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    /// Subset indicator: bit `t` set iff row `t` is in the subset.
    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn width(&self) -> usize {
        self.n
    }

    /// Moves to the next step. Returns `None` once the last state
    /// `2^n - 1` has been reached.
    #[inline]
    pub fn advance(&mut self) -> Option<Flip> {
        let next = self.step + 1;
        if next >> self.n != 0 {
            return None;
        }
        let bit = next.trailing_zeros();
        let direction = if (self.state >> bit) & 1 == 1 { Direction::Leave } else { Direction::Enter };
        self.state ^= 1 << bit;
        self.step = next;
        Some(Flip { bit, direction })
    }
}

impl Iterator for GrayCursor {
    type Item = Flip;

    fn next(&mut self) -> Option<Flip> {
        self.advance()
    }
}
