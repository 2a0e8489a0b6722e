//! The number `s(n)` of tournament (equivalently Meeussen) sequences of
//! length `n`, computed three independent ways:
//!
//! - [`count_via_profile`]: the full label histogram of level `n`.
//!   Exponential width, exact and simple.
//! - [`count_fast`]: the descendant table `d(n, k)`, where only columns
//!   `0..=2n+2` of each row are ever needed. Polynomial time.
//! - [`count_via_polynomial`]: the level polynomials `p_n` with exact
//!   rational coefficients, evaluated at 1.
//!
//! [`count_dfs`] walks the tree itself and serves as the slowest oracle.

mod polynomial;
mod profile;
mod published;
mod table;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::sequences::{enumerate_tree_with_limit, Kind};

pub use polynomial::{
    count_via_polynomial, count_via_polynomial_with_limit, level_polynomial,
    level_polynomial_with_limit, power_sum_polynomial, LevelPolynomial, RationalPolynomial,
    DEFAULT_POLYNOMIAL_LIMIT,
};
pub use profile::{
    count_via_profile, count_via_profile_with_limit, level_profile, level_profile_with_limit,
    LevelProfile, DEFAULT_PROFILE_LIMIT,
};
pub use published::{published_count, PUBLISHED_COUNTS};
pub use table::{bound_check, count_fast, CountTable, PascalTriangle};

/// Deepest level [`count_dfs`] will walk.
pub const DFS_LIMIT: usize = 10;

/// Counts the leaves of the depth-`n` tournament tree one by one.
pub fn count_dfs(n: usize) -> Result<BigUint> {
    if n > DFS_LIMIT {
        return Err(Error::LimitExceeded {
            what: "dfs level",
            requested: n,
            limit: DFS_LIMIT,
        });
    }
    enumerate_tree_with_limit(Kind::Tournament, n, DFS_LIMIT, |_| {}).map(BigUint::from)
}

/// Which route [`count`] takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fast,
    Profile,
    Dfs,
    Polynomial,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Profile => "profile",
            Method::Dfs => "dfs",
            Method::Polynomial => "poly",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Method::Fast),
            "profile" => Ok(Method::Profile),
            "dfs" => Ok(Method::Dfs),
            "poly" | "polynomial" => Ok(Method::Polynomial),
            other => Err(Error::Parse(format!("unknown counting method `{other}`"))),
        }
    }
}

pub fn count(n: usize, method: Method) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Precondition(
            "sequence length must be at least 1".into(),
        ));
    }
    match method {
        Method::Fast => Ok(count_fast(n)),
        Method::Profile => count_via_profile(n),
        Method::Dfs => count_dfs(n),
        Method::Polynomial => count_via_polynomial(n),
    }
}
