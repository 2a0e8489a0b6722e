//! Tournament and Meeussen sequences as finite prefixes.
//!
//! Everything in this module works directly from the definitions: subset
//! sums are counted by dynamic programming and trees are walked node by
//! node. These are the brute-force oracles the faster machinery in
//! [`crate::bijection`] and [`crate::counting`] is checked against.

mod representation;
mod tree;
mod validate;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use representation::{
    representation_profile, representation_profile_with_budget, RepresentationProfile,
};
pub use tree::{
    enumerate_tree, enumerate_tree_with_limit, walk_tree, walk_tree_with_limit, Node,
    DEFAULT_DEPTH_LIMIT, MAX_DEPTH,
};
pub use validate::{
    candidates, candidates_with_budget, tournament_children, validate_meeussen,
    validate_meeussen_with_budget, validate_tournament, ValidationMode,
};

/// Default cap on the subset-sum total handled by the counting array.
pub const DEFAULT_SUM_BUDGET: usize = 1 << 26;

/// Which of the two sequence families a tree or check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Tournament,
    Meeussen,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Tournament => "tournament",
            Kind::Meeussen => "meeussen",
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tournament" => Ok(Kind::Tournament),
            "meeussen" => Ok(Kind::Meeussen),
            other => Err(Error::Parse(format!("unknown sequence kind `{other}`"))),
        }
    }
}

/// A non-empty list of positive integers.
///
/// Ordering is lexicographic on the terms, which is the order children are
/// visited in both generating trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence(Vec<BigUint>);

impl Sequence {
    pub fn new(terms: Vec<BigUint>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse("a sequence needs at least one term".into()));
        }
        if let Some(i) = terms.iter().position(Zero::is_zero) {
            return Err(Error::Parse(format!(
                "term {i} is zero; terms must be positive"
            )));
        }
        Ok(Sequence(terms))
    }

    pub fn from_u64s(terms: &[u64]) -> Result<Self> {
        Sequence::new(terms.iter().map(|&t| BigUint::from(t)).collect())
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<BigUint> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> &BigUint {
        self.0.last().expect("sequence is non-empty")
    }

    pub fn sum(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// The terms as machine integers, if every term fits.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|t| u64::try_from(t).ok()).collect()
    }

    /// First `len` terms.
    pub fn prefix(&self, len: usize) -> Result<Sequence> {
        if len == 0 || len > self.len() {
            return Err(Error::OutOfRange {
                what: "prefix length",
                value: BigUint::from(len),
                low: BigUint::one(),
                high: BigUint::from(self.len()),
            });
        }
        Ok(Sequence(self.0[..len].to_vec()))
    }
}

/// Parses one term of the text format: a decimal positive integer with no
/// sign and no leading zeros.
pub fn parse_term(token: &str) -> Result<BigUint> {
    let bytes = token.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    if !bytes.iter().all(u8::is_ascii_digit) {
        return Err(Error::Parse(format!(
            "`{token}` is not an unsigned decimal integer"
        )));
    }
    if bytes[0] == b'0' {
        return Err(Error::Parse(format!(
            "`{token}` is zero or has a leading zero"
        )));
    }
    Ok(token.parse::<BigUint>().expect("validated decimal digits"))
}

impl FromStr for Sequence {
    type Err = Error;

    /// Terms separated by single spaces.
    fn from_str(line: &str) -> Result<Self> {
        let terms = line
            .split(' ')
            .map(parse_term)
            .collect::<Result<Vec<_>>>()?;
        Sequence::new(terms)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Identifies which defining rule a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// The first term must be 1.
    FirstTerm,
    /// Terms must strictly increase.
    Increasing,
    /// A tournament term may be at most twice its predecessor.
    AtMostDouble,
    /// Subset sums must cover `[0, S]` with no gaps.
    Interval,
    /// `m_i - 1` must have exactly one subset representation.
    UniqueRepresentation,
    /// `m_i - 1` is not a candidate of the preceding prefix.
    Candidate,
    /// The `t_i`-th uniquely representable sum must be `m_i - 1`.
    UrRankTerm,
    /// The `(t_i + 1)`-th uniquely representable sum must be
    /// `m_1 + ... + m_{i-1} + 1`.
    UrRankSuccessor,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::FirstTerm => "first-term",
            Rule::Increasing => "increasing",
            Rule::AtMostDouble => "at-most-double",
            Rule::Interval => "interval",
            Rule::UniqueRepresentation => "unique-representation",
            Rule::Candidate => "candidate",
            Rule::UrRankTerm => "ur-rank-term",
            Rule::UrRankSuccessor => "ur-rank-successor",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One failed rule. `index` is the zero-based position of the offending term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub rule: Rule,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, index: usize, rule: Rule, detail: impl Into<String>) {
        self.violations.push(Violation {
            index,
            rule,
            detail: detail.into(),
        });
    }

    pub fn has_rule(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "index {} [{}]: {}", v.index, v.rule, v.detail)?;
        }
        Ok(())
    }
}
