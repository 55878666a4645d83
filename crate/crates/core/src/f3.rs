//! Packed GF(3) vectors in bipedal form.
//!
//! A trit is stored as a `(mag, sgn)` bit pair:
//!
//! ```text
//!  0  -> (0, 0)   or the alternate zero (0, 1)
//!  1  -> (1, 0)
//! -1  -> (1, 1)
//! ```
//!
//! A vector of `n` trits keeps all magnitude bits in one bit vector and all
//! sign bits in another, so a single word operation acts on 64 trits at
//! once. Element `j` (1-based) lives at global bit `n - j`, counting from the
//! least significant bit of limb 0. For `n <= 64` the pair `(mag, sgn)` is
//! therefore exactly the pair of integers one would write by hand, e.g.
//! `(1, 1, 0, -1) -> (0xd, 0x1)`.
//!
//! Bits at positions `>= n` in the top limb are always zero.

use std::fmt;

use crate::error::{Error, Result};

/// Bits per limb.
pub const LIMB_BITS: usize = 64;

/// The `n` low bits set. `n = 64` is handled without a 64-bit shift.
#[inline]
pub const fn word_mask(n: usize) -> u64 {
    if n >= LIMB_BITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of limbs needed for `n` trits.
#[inline]
pub const fn limbs_for(n: usize) -> usize {
    n.div_ceil(LIMB_BITS)
}

/// Centered residue of `k` modulo 3, in `{-1, 0, 1}`.
#[inline]
pub fn cmod3(k: i128) -> i8 {
    match k.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

// Word-level kernels. These are the hot-path forms; the `BipedalVec` methods
// apply them limb by limb.

/// Sum of two bipedal words. Six word operations; the shared term is
/// computed once.
#[inline(always)]
pub fn add_words(mag1: u64, sgn1: u64, mag2: u64, sgn2: u64) -> (u64, u64) {
    let x = mag2 & (mag1 ^ sgn1 ^ sgn2);
    (x | (mag1 ^ mag2), x ^ sgn1)
}

/// Difference of two bipedal words. Six word operations.
#[inline(always)]
pub fn sub_words(mag1: u64, sgn1: u64, mag2: u64, sgn2: u64) -> (u64, u64) {
    let x = mag1 & (sgn1 ^ sgn2);
    (x | (mag1 ^ mag2), x ^ (mag2 ^ sgn2))
}

/// Pointwise product of two bipedal words.
#[inline(always)]
pub fn mul_words(mag1: u64, sgn1: u64, mag2: u64, sgn2: u64) -> (u64, u64) {
    (mag1 & mag2, sgn1 ^ sgn2)
}

/// Pointwise quotient. Positions where the denominator is zero carry an
/// unspecified trit.
#[inline(always)]
pub fn div_words(mag1: u64, sgn1: u64, _mag2: u64, sgn2: u64) -> (u64, u64) {
    (mag1, sgn1 ^ sgn2)
}

/// Dense vector over GF(3) with entries in `{-1, 0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TritVec(Vec<i8>);

impl TritVec {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(&bad) = values.iter().find(|v| !(-1..=1).contains(*v)) {
            return Err(Error::InvalidTrit(bad as i64));
        }
        Ok(TritVec(values))
    }

    /// Builds a vector from arbitrary integers, reducing each into `{-1, 0, 1}`.
    pub fn from_residues(values: &[i64]) -> Result<Self> {
        TritVec::new(values.iter().map(|&v| cmod3(v as i128)).collect())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        TritVec::new(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i8> {
        self.0
    }
}

impl fmt::Debug for TritVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl std::ops::Index<usize> for TritVec {
    type Output = i8;

    fn index(&self, idx: usize) -> &i8 {
        &self.0[idx]
    }
}

/// Bitsliced GF(3) vector: magnitude and sign bit vectors packed into
/// 64-bit limbs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipedalVec {
    n: usize,
    mag: Vec<u64>,
    sgn: Vec<u64>,
}

impl BipedalVec {
    /// Wraps raw limbs, checking limb count and canonical padding.
    pub fn from_parts(n: usize, mag: Vec<u64>, sgn: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        let limbs = limbs_for(n);
        if mag.len() != limbs {
            return Err(Error::LengthMismatch { left: mag.len(), right: limbs });
        }
        if sgn.len() != limbs {
            return Err(Error::LengthMismatch { left: sgn.len(), right: limbs });
        }
        let top = top_mask(n);
        if mag[limbs - 1] & !top != 0 || sgn[limbs - 1] & !top != 0 {
            return Err(Error::InvalidArgument(format!(
                "bits set above position {n} in a bipedal vector"
            )));
        }
        Ok(BipedalVec { n, mag, sgn })
    }

    /// Single-limb constructor for `1 <= n <= 64`.
    pub fn from_words(n: usize, mag: u64, sgn: u64) -> Result<Self> {
        if n > LIMB_BITS {
            return Err(Error::DimensionTooLarge { what: "single-word bipedal vector", n, max: LIMB_BITS });
        }
        BipedalVec::from_parts(n, vec![mag], vec![sgn])
    }

    /// The canonical representation: mag bit set iff the trit is nonzero,
    /// sgn bit set iff it is -1.
    pub fn encode(v: &TritVec) -> Self {
        let n = v.len();
        let mut mag = vec![0u64; limbs_for(n)];
        let mut sgn = vec![0u64; limbs_for(n)];
        for (k, &t) in v.as_slice().iter().enumerate() {
            let bit = n - 1 - k;
            let (limb, off) = (bit / LIMB_BITS, bit % LIMB_BITS);
            if t != 0 {
                mag[limb] |= 1 << off;
                if t == -1 {
                    sgn[limb] |= 1 << off;
                }
            }
        }
        BipedalVec { n, mag, sgn }
    }

    pub fn decode(&self) -> TritVec {
        let values = (0..self.n).map(|k| self.trit(k)).collect();
        TritVec(values)
    }

    /// Trit at 0-based position `k`.
    pub fn trit(&self, k: usize) -> i8 {
        let bit = self.n - 1 - k;
        let (limb, off) = (bit / LIMB_BITS, bit % LIMB_BITS);
        match ((self.mag[limb] >> off) & 1, (self.sgn[limb] >> off) & 1) {
            (0, _) => 0,
            (_, 0) => 1,
            _ => -1,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mag(&self) -> &[u64] {
        &self.mag
    }

    pub fn sgn(&self) -> &[u64] {
        &self.sgn
    }

    /// `(mag, sgn)` of limb 0. Only meaningful on its own when `n <= 64`.
    pub fn words(&self) -> (u64, u64) {
        (self.mag[0], self.sgn[0])
    }

    pub fn add_reps(&self, other: &BipedalVec) -> Result<BipedalVec> {
        self.zip_with(other, add_words)
    }

    pub fn sub_reps(&self, other: &BipedalVec) -> Result<BipedalVec> {
        self.zip_with(other, sub_words)
    }

    pub fn mul_reps(&self, other: &BipedalVec) -> Result<BipedalVec> {
        self.zip_with(other, mul_words)
    }

    /// Pointwise quotient. Where `other` has a zero trit the result at that
    /// position is unspecified (but still a valid trit).
    pub fn div_reps(&self, other: &BipedalVec) -> Result<BipedalVec> {
        self.zip_with(other, div_words)
    }

    /// True iff no trit is zero.
    pub fn is_full_magnitude(&self) -> bool {
        let last = self.mag.len() - 1;
        self.mag[..last].iter().all(|&w| w == u64::MAX) && self.mag[last] == top_mask(self.n)
    }

    /// `(-1)^popcount(sgn)`.
    pub fn sign_parity(&self) -> i8 {
        let ones: u32 = self.sgn.iter().map(|w| w.count_ones()).sum();
        if ones & 1 == 0 {
            1
        } else {
            -1
        }
    }

    fn zip_with(&self, other: &BipedalVec, op: impl Fn(u64, u64, u64, u64) -> (u64, u64)) -> Result<BipedalVec> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        let (mag, sgn) = self
            .mag
            .iter()
            .zip(&self.sgn)
            .zip(other.mag.iter().zip(&other.sgn))
            .map(|((&m1, &s1), (&m2, &s2))| op(m1, s1, m2, s2))
            .unzip();
        Ok(BipedalVec { n: self.n, mag, sgn })
    }
}

impl fmt::Debug for BipedalVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipedalVec(n={}, mag=[", self.n)?;
        for (i, w) in self.mag.iter().enumerate().rev() {
            if i + 1 != self.mag.len() {
                f.write_str(" ")?;
            }
            write!(f, "{w:#x}")?;
        }
        f.write_str("], sgn=[")?;
        for (i, w) in self.sgn.iter().enumerate().rev() {
            if i + 1 != self.sgn.len() {
                f.write_str(" ")?;
            }
            write!(f, "{w:#x}")?;
        }
        f.write_str("])")
    }
}

impl From<&TritVec> for BipedalVec {
    fn from(v: &TritVec) -> Self {
        BipedalVec::encode(v)
    }
}

impl From<&BipedalVec> for TritVec {
    fn from(r: &BipedalVec) -> Self {
        r.decode()
    }
}

/// Mask of valid bits in the top limb.
#[inline]
fn top_mask(n: usize) -> u64 {
    match n % LIMB_BITS {
        0 => u64::MAX,
        r => word_mask(r),
    }
}
