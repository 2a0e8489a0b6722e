use super::{Sequence, DEFAULT_SUM_BUDGET};
use crate::error::{Error, Result};

/// Number of ways each target in `[0, S]` is a subset sum of a sequence,
/// saturated at 2.
///
/// A stored 2 means "two or more". Uniqueness questions only ever need to
/// tell 0, 1 and many apart, so one byte per target is enough.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationProfile {
    counts: Vec<u8>,
}

impl RepresentationProfile {
    /// Profile of the empty sequence: only 0 is representable.
    pub(crate) fn empty() -> Self {
        RepresentationProfile { counts: vec![1] }
    }

    /// Adds one more term to the underlying multiset.
    pub(crate) fn extend(&mut self, term: usize) {
        let old_len = self.counts.len();
        self.counts.resize(old_len + term, 0);
        for t in (term..self.counts.len()).rev() {
            let add = self.counts[t - term];
            if add != 0 {
                self.counts[t] = (self.counts[t] + add).min(2);
            }
        }
    }

    /// The subset-sum total `S`.
    pub fn total(&self) -> usize {
        self.counts.len() - 1
    }

    /// Saturated representation count of `target`; 0 above `S`.
    pub fn count(&self, target: usize) -> u8 {
        self.counts.get(target).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u8] {
        &self.counts
    }

    pub fn is_representable(&self, target: usize) -> bool {
        self.count(target) >= 1
    }

    pub fn is_uniquely_representable(&self, target: usize) -> bool {
        self.count(target) == 1
    }

    /// `r(A)` in ascending order.
    pub fn representable(&self) -> Vec<usize> {
        self.targets_where(|c| c >= 1)
    }

    /// `ur(A)` in ascending order.
    pub fn uniquely_representable(&self) -> Vec<usize> {
        self.targets_where(|c| c == 1)
    }

    /// Maximal runs `[lo, hi]` of unrepresentable targets.
    pub fn gaps(&self) -> Vec<(usize, usize)> {
        let mut gaps = Vec::new();
        let mut start = None;
        for (t, &c) in self.counts.iter().enumerate() {
            match (c == 0, start) {
                (true, None) => start = Some(t),
                (false, Some(lo)) => {
                    gaps.push((lo, t - 1));
                    start = None;
                }
                _ => {}
            }
        }
        // counts[S] is always 1, so a run cannot reach the end.
        debug_assert!(start.is_none());
        gaps
    }

    fn targets_where(&self, keep: impl Fn(u8) -> bool) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| keep(c))
            .map(|(t, _)| t)
            .collect()
    }
}

pub fn representation_profile(seq: &Sequence) -> Result<RepresentationProfile> {
    representation_profile_with_budget(seq, DEFAULT_SUM_BUDGET)
}

/// Counts subset representations of every target in `[0, S]` by a single
/// pass of the 0/1 knapsack convolution. Fails if `S` exceeds `budget`.
pub fn representation_profile_with_budget(
    seq: &Sequence,
    budget: usize,
) -> Result<RepresentationProfile> {
    let total = seq.sum();
    let fits = usize::try_from(&total).ok().filter(|&s| s <= budget);
    if fits.is_none() {
        return Err(Error::BudgetExceeded {
            total,
            limit: budget,
        });
    }
    let mut profile = RepresentationProfile::empty();
    profile.counts.reserve(fits.unwrap());
    for term in seq.terms() {
        profile.extend(usize::try_from(term).expect("term is at most the total"));
    }
    Ok(profile)
}
