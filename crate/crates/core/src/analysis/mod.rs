//! Estimation and asymptotics for `s(n)`.
//!
//! Walking the tournament tree from the root and picking each child
//! uniformly, the product of the labels passed on the way to level `n` has
//! expectation exactly `s(n)`. Labels double as child counts, which is what
//! makes [`sample_path`] an unbiased estimator. The same walk with real
//! ratios drawn from `(1, 2]` gives [`continuous_expectation`], a lower
//! bound, and [`growth_series`] measures how far `lg s(n)` sits above
//! `C(n,2) - lg n!` in units of `(log n)^2`.

mod bounds;
mod growth;
mod monte_carlo;
mod real;

pub use bounds::{alpha, alpha_partial, continuous_expectation, lower_bound};
pub use growth::{growth_csv, growth_series, GrowthPoint, GrowthSeries, LogBase};
pub use monte_carlo::{
    estimate_count, estimate_count_parallel, exact_path_expectation, sample_path,
    sampled_label_root, Accumulator, Estimate, CHUNK_SAMPLES,
};
pub use real::{Real, DEFAULT_PRECISION};
