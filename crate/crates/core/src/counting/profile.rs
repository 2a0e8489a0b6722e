use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Row `n` is about `2^(n-1)` labels wide.
pub const DEFAULT_PROFILE_LIMIT: usize = 24;

/// How many level-`n` nodes carry each label `k`, for `n <= k <= 2^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    level: usize,
    min_label: u64,
    counts: Vec<BigUint>,
}

impl LevelProfile {
    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of level nodes labelled `k`; zero outside the support.
    pub fn count(&self, k: u64) -> BigUint {
        k.checked_sub(self.min_label)
            .and_then(|i| self.counts.get(i as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// `(label, count)` pairs with nonzero count, ascending by label.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_label + i as u64, c))
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

pub fn level_profile(n: usize) -> Result<LevelProfile> {
    level_profile_with_limit(n, DEFAULT_PROFILE_LIMIT)
}

/// Builds the label histogram row by row from
/// `c(n, k) = c(n-1, ceil(k/2)) + ... + c(n-1, k-1)`,
/// each row from prefix sums of the previous one.
pub fn level_profile_with_limit(n: usize, limit: usize) -> Result<LevelProfile> {
    if n == 0 || n > limit || n > 63 {
        return Err(Error::LimitExceeded {
            what: "profile level",
            requested: n,
            limit: limit.min(63),
        });
    }
    let mut row = LevelProfile {
        level: 1,
        min_label: 1,
        counts: vec![BigUint::one()],
    };
    while row.level < n {
        // prefix[i] = sum of counts for labels below min_label + i.
        let mut prefix = Vec::with_capacity(row.counts.len() + 1);
        prefix.push(BigUint::zero());
        for c in &row.counts {
            let next = prefix.last().expect("seeded") + c;
            prefix.push(next);
        }
        let lo = row.min_label;
        let hi = lo + row.counts.len() as u64 - 1;
        // sum of previous-row counts over labels in [a, b]
        let range_sum = |a: u64, b: u64| -> BigUint {
            let a = a.max(lo);
            let b = b.min(hi);
            if a > b {
                return BigUint::zero();
            }
            &prefix[(b - lo + 1) as usize] - &prefix[(a - lo) as usize]
        };
        let new_lo = lo + 1;
        let new_hi = 2 * hi;
        let counts = (new_lo..=new_hi)
            .map(|k| range_sum(k.div_ceil(2), k - 1))
            .collect();
        row = LevelProfile {
            level: row.level + 1,
            min_label: new_lo,
            counts,
        };
    }
    Ok(row)
}

pub fn count_via_profile(n: usize) -> Result<BigUint> {
    count_via_profile_with_limit(n, DEFAULT_PROFILE_LIMIT)
}

/// `s(n)` as the total of the level-`n` label histogram.
pub fn count_via_profile_with_limit(n: usize, limit: usize) -> Result<BigUint> {
    Ok(level_profile_with_limit(n, limit)?.total())
}
