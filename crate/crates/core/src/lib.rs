//! Tournament and Meeussen sequences.
//!
//! A tournament sequence starts at 1 and each term lies strictly between
//! the previous term and twice it. A Meeussen sequence starts at 1, its
//! subset sums cover an initial segment of the integers, and every
//! `m_i - 1` is a subset sum in exactly one way. Both families form the
//! same generating tree, `(k) -> (k+1)(k+2)...(2k)`.
//!
//! - [`sequences`]: validation, subset-sum representation profiles,
//!   candidate sets and brute-force tree enumeration.
//! - [`bijection`]: the order-preserving tree isomorphism and its inverse.
//! - [`counting`]: the number of sequences of length `n`, three ways.
//! - [`analysis`]: Monte Carlo estimation, bounds and growth constants.

pub mod analysis;
pub mod bijection;
pub mod counting;
mod error;
pub mod sequences;

pub use analysis::{Estimate, GrowthPoint, LogBase, Real};
pub use bijection::{phi, phi_inverse, BijectionState};
pub use counting::{count_fast, CountTable, LevelPolynomial, LevelProfile, PUBLISHED_COUNTS};
pub use error::{Error, Result};
pub use sequences::{Kind, RepresentationProfile, Rule, Sequence, ValidationReport, Violation};
