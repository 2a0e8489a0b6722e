//! The tree isomorphism between tournament and Meeussen sequences.
//!
//! Both trees follow the rule `(k) -> (k+1)...(2k)`, once tournament
//! labels are read as child counts. A node's child index therefore
//! determines the matching child on the other side. The `k`-th smallest
//! candidate `u(n, k)` for extending `(m_1, ..., m_n)` satisfies, with
//! `d = t_n - t_{n-1}` and `S_n = m_1 + ... + m_n`:
//!
//! ```text
//! u(1, 1) = 1
//! u(n, k) = u(n-1, k - d) + m_n     if k > d
//!         = S_n - u(n-1, d + 1 - k) otherwise
//! ```
//!
//! and `m_{n+1} = u(n, t_{n+1} - t_n) + 1`. Candidate sets are never
//! materialized; each query walks at most `n` levels.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequences::{
    representation_profile_with_budget, validate_tournament, Rule, Sequence, ValidationReport,
    DEFAULT_SUM_BUDGET,
};

/// Entries kept before the candidate cache is dropped and refilled.
const MEMO_CAPACITY: usize = 1 << 16;

/// A tournament prefix together with its image prefix.
///
/// Candidate queries are cached per `(level, index)`. The cache sits behind
/// a `RefCell`, so a state may move between threads but is not shared.
#[derive(Debug, Clone)]
pub struct BijectionState {
    tournament: Vec<BigUint>,
    /// `jumps[i] = t_{i+2} - t_{i+1}`, one per extension.
    jumps: Vec<BigUint>,
    meeussen: Vec<BigUint>,
    /// `sums[i] = m_1 + ... + m_{i+1}`.
    sums: Vec<BigUint>,
    memo: RefCell<HashMap<(usize, BigUint), BigUint>>,
}

impl Default for BijectionState {
    fn default() -> Self {
        Self::new()
    }
}

impl BijectionState {
    /// The root: `T = (1)`, `M = (1)`.
    pub fn new() -> Self {
        BijectionState {
            tournament: vec![BigUint::one()],
            jumps: Vec::new(),
            meeussen: vec![BigUint::one()],
            sums: vec![BigUint::one()],
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.tournament.len()
    }

    /// Always false: the root is always present.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tournament(&self) -> &[BigUint] {
        &self.tournament
    }

    pub fn meeussen(&self) -> &[BigUint] {
        &self.meeussen
    }

    pub fn jumps(&self) -> &[BigUint] {
        &self.jumps
    }

    pub fn sums(&self) -> &[BigUint] {
        &self.sums
    }

    /// `t_n`, which is also the number of candidates at the current level.
    pub fn last_label(&self) -> &BigUint {
        self.tournament.last().expect("root is always present")
    }

    /// The `k`-th smallest candidate (1-based) for extending
    /// `(m_1, ..., m_level)`.
    pub fn candidate_query(&self, level: usize, k: &BigUint) -> Result<BigUint> {
        if level == 0 || level > self.len() {
            return Err(Error::OutOfRange {
                what: "level",
                value: BigUint::from(level),
                low: BigUint::one(),
                high: BigUint::from(self.len()),
            });
        }
        let count = &self.tournament[level - 1];
        if k.is_zero() || k > count {
            return Err(Error::OutOfRange {
                what: "candidate index",
                value: k.clone(),
                low: BigUint::one(),
                high: count.clone(),
            });
        }
        Ok(self.query(level, k.clone()))
    }

    /// Every candidate at `level`, ascending. There are `t_level` of them.
    pub fn candidates(&self, level: usize) -> Result<Vec<BigUint>> {
        let count =
            self.tournament
                .get(level.wrapping_sub(1))
                .ok_or_else(|| Error::OutOfRange {
                    what: "level",
                    value: BigUint::from(level),
                    low: BigUint::one(),
                    high: BigUint::from(self.len()),
                })?;
        let count = u64::try_from(count)
            .map_err(|_| Error::Precondition(format!("{count} candidates are too many to list")))?;
        Ok((1..=count)
            .map(|k| self.query(level, BigUint::from(k)))
            .collect())
    }

    /// Resolves `u(level, k)` by walking down to level 1, then fills the
    /// cache on the way back up. Indices are assumed in range.
    fn query(&self, level: usize, k: BigUint) -> BigUint {
        let mut memo = self.memo.borrow_mut();
        // Each step either shifts the value by m_l or reflects it through S_l.
        let mut path: Vec<(usize, BigUint, bool)> = Vec::new();
        let (mut level, mut k) = (level, k);
        let mut value = loop {
            if level == 1 {
                break BigUint::one();
            }
            if let Some(v) = memo.get(&(level, k.clone())) {
                break v.clone();
            }
            let jump = &self.jumps[level - 2];
            let (next, reflect) = if k > *jump {
                (&k - jump, false)
            } else {
                (jump + 1u32 - &k, true)
            };
            path.push((level, k, reflect));
            level -= 1;
            k = next;
        };
        if memo.len() + path.len() > MEMO_CAPACITY {
            memo.clear();
        }
        for (level, k, reflect) in path.into_iter().rev() {
            if reflect {
                value = &self.sums[level - 1] - value;
            } else {
                value += &self.meeussen[level - 1];
            }
            memo.insert((level, k), value.clone());
        }
        value
    }

    /// Appends `t_{n+1} = t_n + jump` and `m_{n+1} = u(n, jump) + 1`.
    /// Returns the new Meeussen term.
    pub fn extend(&mut self, jump: &BigUint) -> Result<&BigUint> {
        let u = self
            .candidate_query(self.len(), jump)
            .map_err(|_| Error::OutOfRange {
                what: "jump",
                value: jump.clone(),
                low: BigUint::one(),
                high: self.last_label().clone(),
            })?;
        self.push(jump.clone(), u + 1u32);
        Ok(self.meeussen.last().expect("just pushed"))
    }

    /// Finds the jump whose candidate equals `m - 1` and appends it.
    /// Candidates increase strictly with the index, so this is a binary
    /// search over `[1, t_n]`.
    pub fn extend_with_meeussen_term(&mut self, m: &BigUint) -> Result<&BigUint> {
        let not_meeussen = Error::NotMeeussen {
            level: self.len() + 1,
        };
        if m.is_zero() {
            return Err(not_meeussen);
        }
        let target = m - 1u32;
        let level = self.len();
        let (mut lo, mut hi) = (BigUint::one(), self.last_label().clone());
        while lo <= hi {
            let mid: BigUint = (&lo + &hi) >> 1u32;
            let u = self.query(level, mid.clone());
            match u.cmp(&target) {
                std::cmp::Ordering::Equal => {
                    self.push(mid, m.clone());
                    return Ok(self.tournament.last().expect("just pushed"));
                }
                std::cmp::Ordering::Less => lo = mid + 1u32,
                std::cmp::Ordering::Greater => {
                    if mid.is_one() {
                        break;
                    }
                    hi = mid - 1u32;
                }
            }
        }
        Err(not_meeussen)
    }

    fn push(&mut self, jump: BigUint, m: BigUint) {
        let t = self.last_label() + &jump;
        let s = self.sums.last().expect("root") + &m;
        self.tournament.push(t);
        self.jumps.push(jump);
        self.meeussen.push(m);
        self.sums.push(s);
    }

    /// Drops back to the first `len` terms.
    pub fn truncate(&mut self, len: usize) {
        let len = len.max(1);
        if len >= self.len() {
            return;
        }
        self.tournament.truncate(len);
        self.meeussen.truncate(len);
        self.sums.truncate(len);
        self.jumps.truncate(len - 1);
        self.memo.borrow_mut().retain(|&(level, _), _| level <= len);
    }
}

/// Maps a tournament sequence to the Meeussen sequence at the same tree
/// position.
pub fn phi(t: &Sequence) -> Result<Sequence> {
    let report = validate_tournament(t);
    if !report.is_valid() {
        return Err(Error::InvalidTournament(report));
    }
    let mut state = BijectionState::new();
    for pair in t.terms().windows(2) {
        state.extend(&(&pair[1] - &pair[0]))?;
    }
    Sequence::new(state.meeussen)
}

/// Recovers the tournament sequence `T` with `phi(T) = m`. Fails with
/// [`Error::NotMeeussen`] at the first term that is not one more than a
/// candidate, which makes this a complete Meeussen test.
pub fn phi_inverse(m: &Sequence) -> Result<Sequence> {
    if !m.terms()[0].is_one() {
        return Err(Error::NotMeeussen { level: 1 });
    }
    let mut state = BijectionState::new();
    for term in &m.terms()[1..] {
        state.extend_with_meeussen_term(term)?;
    }
    Sequence::new(state.tournament)
}

pub fn check_lemma_tm(t: &Sequence) -> Result<ValidationReport> {
    check_lemma_tm_with_budget(t, DEFAULT_SUM_BUDGET)
}

/// Checks, against the full set `ur(M)` of `M = phi(T)` sorted as
/// `u_1 < u_2 < ...`, that `u_{t_i} = m_i - 1` and
/// `u_{t_i + 1} = m_1 + ... + m_{i-1} + 1` for every `i`.
pub fn check_lemma_tm_with_budget(t: &Sequence, budget: usize) -> Result<ValidationReport> {
    let m = phi(t)?;
    let profile = representation_profile_with_budget(&m, budget)?;
    let ur = profile.uniquely_representable();
    let mut report = ValidationReport::default();
    let mut prefix_sum = 0usize;
    for (i, (ti, mi)) in t.terms().iter().zip(m.terms()).enumerate() {
        // t_i <= m_i <= S, which fits the budget.
        let rank = usize::try_from(ti).expect("bounded by the sum");
        let mi = usize::try_from(mi).expect("bounded by the sum");
        match ur.get(rank - 1) {
            Some(&u) if u == mi - 1 => {}
            got => report.push(
                i,
                Rule::UrRankTerm,
                format!("u_{rank} is {got:?}, expected m_{} - 1 = {}", i + 1, mi - 1),
            ),
        }
        match ur.get(rank) {
            Some(&u) if u == prefix_sum + 1 => {}
            got => report.push(
                i,
                Rule::UrRankSuccessor,
                format!("u_{} is {got:?}, expected {}", rank + 1, prefix_sum + 1),
            ),
        }
        prefix_sum += mi;
    }
    Ok(report)
}

/// For `t_{n+1} = 2 t_n - t_{n-k}` (1-based `n`, `k >= 1`), reports whether
/// `m_{n+1} = m_n + m_{n-1} + ... + m_{n-k}` in `phi(T)`.
pub fn check_kbonacci(t: &Sequence, n: usize, k: usize) -> Result<bool> {
    let report = validate_tournament(t);
    if !report.is_valid() {
        return Err(Error::InvalidTournament(report));
    }
    if k == 0 || k >= n || n >= t.len() {
        return Err(Error::Precondition(format!(
            "need 1 <= k < n < length, got n = {n}, k = {k}, length {}",
            t.len()
        )));
    }
    let terms = t.terms();
    let expected: BigUint = (&terms[n - 1] << 1u32) - &terms[n - k - 1];
    if terms[n] != expected {
        return Err(Error::Precondition(format!(
            "t_{} = {} but 2 t_{n} - t_{} = {expected}",
            n + 1,
            terms[n],
            n - k
        )));
    }
    let m = phi(&t.prefix(n + 1)?)?;
    let m = m.terms();
    let window: BigUint = m[n - k - 1..n].iter().sum();
    Ok(m[n] == window)
}
