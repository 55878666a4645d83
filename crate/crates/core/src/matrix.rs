use std::fmt;

use crate::error::{Error, Result};
use crate::f3::{cmod3, BipedalVec, TritVec, LIMB_BITS};

/// Square matrix over GF(3) with each row cached in bipedal form.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixF3 {
    n: usize,
    entries: Vec<i8>,
    rows: Vec<BipedalVec>,
}

impl MatrixF3 {
    /// Builds a matrix from integer rows. Entries are reduced mod 3, so both
    /// `{0, 1, 2}` and `{-1, 0, 1}` inputs are accepted.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare { row: i, len: row.len(), n });
            }
            entries.extend(row.iter().map(|&v| cmod3(v as i128)));
        }
        MatrixF3::from_trits(n, entries)
    }

    /// Row-major trits, each already in `{-1, 0, 1}`.
    pub fn from_trits(n: usize, entries: Vec<i8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        if entries.len() != n * n {
            return Err(Error::LengthMismatch { left: entries.len(), right: n * n });
        }
        let rows = entries
            .chunks(n)
            .map(|r| TritVec::new(r.to_vec()).map(|v| BipedalVec::encode(&v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixF3 { n, entries, rows })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut e = vec![0i8; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        MatrixF3::from_trits(n, e)
    }

    pub fn filled(n: usize, value: i8) -> Result<Self> {
        MatrixF3::from_trits(n, vec![value; n * n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn bipedal_rows(&self) -> &[BipedalVec] {
        &self.rows
    }

    /// Single-word `(mag, sgn)` rows; `None` when `n > 64`.
    pub fn row_words(&self) -> Option<Vec<(u64, u64)>> {
        (self.n <= LIMB_BITS).then(|| self.rows.iter().map(BipedalVec::words).collect())
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let e = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        MatrixF3::from_trits(n, e).expect("transpose of a valid matrix")
    }

    /// Copy with row `i` multiplied by `c`.
    pub fn scale_row(&self, i: usize, c: i8) -> Self {
        let mut e = self.entries.clone();
        for v in &mut e[i * self.n..(i + 1) * self.n] {
            *v = cmod3((*v as i128) * c as i128);
        }
        MatrixF3::from_trits(self.n, e).expect("scaled matrix stays valid")
    }

    /// Copy with rows reordered: new row `k` is old row `perm[k]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        let e = perm.iter().flat_map(|&r| self.row(r).iter().copied()).collect();
        MatrixF3::from_trits(self.n, e).expect("row permutation stays valid")
    }

    /// Copy with columns reordered: new column `k` is old column `perm[k]`.
    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let e = (0..n * n).map(|k| self.get(k / n, perm[k % n])).collect();
        MatrixF3::from_trits(n, e).expect("column permutation stays valid")
    }
}

impl fmt::Debug for MatrixF3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_class_representatives() {
        let a = MatrixF3::from_rows(&[[0, 1, 2], [3, 4, 5], [-1, -2, -3]]).unwrap();
        assert_eq!(a.entries(), &[0, 1, -1, 0, 1, -1, -1, 1, 0]);
        assert_eq!(a.bipedal_rows()[0].words(), (0b011, 0b001));
    }

    #[test]
    fn rejects_ragged() {
        assert_eq!(
            MatrixF3::from_rows(&[vec![1, 0], vec![1]]),
            Err(Error::NotSquare { row: 1, len: 1, n: 2 })
        );
        assert_eq!(MatrixF3::from_rows::<[i64; 0]>(&[]), Err(Error::EmptyVector));
    }

    #[test]
    fn cached_rows_match_entries() {
        let a = MatrixF3::from_rows(&[[1, -1], [0, 1]]).unwrap();
        for i in 0..2 {
            assert_eq!(a.bipedal_rows()[i].decode().as_slice(), a.row(i));
        }
        let t = a.transpose();
        assert_eq!(t.row(0), &[1, 0]);
        assert_eq!(t.bipedal_rows()[1].decode().as_slice(), &[-1, 1]);
    }
}
