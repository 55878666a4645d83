//! Permanents of matrices over GF(3).
//!
//! Trit vectors are stored bitsliced as a magnitude word and a sign word
//! ([`BipedalVec`]), so adding two rows of up to 64 entries costs six word
//! operations. On top of that sit three permanent engines that must always
//! agree: a naive permutation sum, a Gray-coded Ryser on integer vectors, and
//! the same Ryser walk on bipedal words. The walk splits into independent
//! blocks of Gray steps for parallel evaluation.
//!
//! The [`experiments`] module reproduces the distribution study (exact counts
//! of zero permanents, Monte Carlo estimates, timing fits) and
//! [`circuit`] searches for minimal Boolean circuits for the bipedal
//! operations.
//!
//! Parallel entry points run on rayon when the default `parallel` feature is
//! enabled and sequentially otherwise; results are identical either way.

pub mod circuit;
mod error;
pub mod experiments;
pub mod f3;
pub mod gray;
mod matrix;
mod par;
pub mod permanent;

pub use error::{Error, Result};
pub use f3::{cmod3, BipedalVec, TritVec};
pub use gray::GrayCursor;
pub use matrix::MatrixF3;
pub use par::{is_parallel, split_range};
pub use permanent::{
    perm_chunk, perm_mod3_fast, perm_mod3_parallel, perm_naive, perm_ryser_reference, ChunkResult, Method,
};
