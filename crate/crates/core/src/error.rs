use num_bigint::BigUint;
use thiserror::Error;

use crate::sequences::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subset-sum total {total} exceeds the representation budget of {limit} targets")]
    BudgetExceeded { total: BigUint, limit: usize },

    #[error("{what} {requested} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("not a tournament sequence: {0}")]
    InvalidTournament(ValidationReport),

    #[error("not a Meeussen sequence: {0}")]
    InvalidMeeussen(ValidationReport),

    #[error("not a Meeussen sequence: no candidate matches term {level}")]
    NotMeeussen { level: usize },

    #[error("{what} {value} is outside [{low}, {high}]")]
    OutOfRange {
        what: &'static str,
        value: BigUint,
        low: BigUint,
        high: BigUint,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("cannot parse sequence: {0}")]
    Parse(String),
}
