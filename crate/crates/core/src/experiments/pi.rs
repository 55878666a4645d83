use crate::error::{Error, Result};
use crate::f3::cmod3;
use crate::matrix::MatrixF3;

/// The first 10,000 decimal digits of pi, starting with the integer part `3`.
pub const PI_DIGITS: &str = include_str!("pi_digits.txt");

/// Digits of pi as numbers, optionally dropping the leading `3`.
pub fn pi_digits(skip_integer_part: bool) -> impl Iterator<Item = u8> {
    PI_DIGITS
        .trim_end()
        .bytes()
        .skip(skip_integer_part as usize)
        .map(|b| b - b'0')
}

/// `n x n` matrix filled row-major with consecutive digits of pi, reduced
/// into `{-1, 0, 1}`. The first row holds the first `n` digits.
pub fn pi_matrix(n: usize, skip_integer_part: bool) -> Result<MatrixF3> {
    let available = PI_DIGITS.trim_end().len() - skip_integer_part as usize;
    if n == 0 {
        return Err(Error::EmptyVector);
    }
    if n.saturating_mul(n) > available {
        return Err(Error::DimensionTooLarge {
            what: "pi digit matrix",
            n,
            max: (available as f64).sqrt() as usize,
        });
    }
    let e = pi_digits(skip_integer_part).take(n * n).map(|d| cmod3(d as i128)).collect();
    MatrixF3::from_trits(n, e)
}
