//! Drivers for the distribution study and timing runs.

mod bench;
mod exact;
mod montecarlo;
mod pi;
mod sampling;

pub use bench::{bench, fit_constant, BenchResult, BenchRow};
pub use exact::{exact_zero_count, ExactCountResult, MAX_EXACT_N};
pub use montecarlo::{montecarlo_zero, zero_probability_series, McResult, SeriesPoint};
pub use pi::{pi_digits, pi_matrix, PI_DIGITS};
pub use sampling::TritSampler;
