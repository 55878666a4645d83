use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("trit vector must have at least one element")]
    EmptyVector,

    #[error("value {0} is not a trit (expected -1, 0 or 1)")]
    InvalidTrit(i64),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("{what}: n = {n} exceeds the supported maximum of {max}")]
    DimensionTooLarge { what: &'static str, n: usize, max: usize },

    #[error("Gray step 0 has no flip")]
    StepZero,

    #[error("step range [{lo}, {hi}) is outside [1, {end}]")]
    RangeOutOfBounds { lo: u64, hi: u64, end: u64 },

    #[error("{0}")]
    Infeasible(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
