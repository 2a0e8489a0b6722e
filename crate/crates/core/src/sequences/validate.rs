use num_bigint::BigUint;
use num_traits::One;

use super::representation::representation_profile_with_budget;
use super::{Rule, Sequence, ValidationReport, DEFAULT_SUM_BUDGET};
use crate::bijection::phi_inverse;
use crate::error::{Error, Result};

/// How [`validate_meeussen`] decides uniqueness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    /// Count subset representations of every target in `[0, S]`.
    /// Pseudo-polynomial; limited by the sum budget.
    Dp,
    /// Invert the tree bijection term by term. Never touches `[0, S]`.
    Structural,
}

fn check_start_and_order(seq: &Sequence, report: &mut ValidationReport) {
    let terms = seq.terms();
    if !terms[0].is_one() {
        report.push(
            0,
            Rule::FirstTerm,
            format!("first term is {}, expected 1", terms[0]),
        );
    }
    for (i, pair) in terms.windows(2).enumerate() {
        if pair[1] <= pair[0] {
            report.push(
                i + 1,
                Rule::Increasing,
                format!(
                    "term {} does not exceed the previous term {}",
                    pair[1], pair[0]
                ),
            );
        }
    }
}

/// Checks `t_1 = 1` and `t_i < t_{i+1} <= 2 t_i`, collecting every failure.
pub fn validate_tournament(seq: &Sequence) -> ValidationReport {
    let mut report = ValidationReport::default();
    check_start_and_order(seq, &mut report);
    for (i, pair) in seq.terms().windows(2).enumerate() {
        let double = &pair[0] << 1u32;
        if pair[1] > double {
            report.push(
                i + 1,
                Rule::AtMostDouble,
                format!(
                    "term {} exceeds twice the previous term ({double})",
                    pair[1]
                ),
            );
        }
    }
    report
}

/// Children labels of a tournament-tree node labelled `k`: `k+1, ..., 2k`.
pub fn tournament_children(k: u64) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::Precondition(
            "a tournament label must be positive".into(),
        ));
    }
    let high = k.checked_mul(2).ok_or_else(|| {
        Error::Precondition(format!("label {k} has children beyond the u64 range"))
    })?;
    Ok((k + 1..=high).collect())
}

pub fn validate_meeussen(seq: &Sequence, mode: ValidationMode) -> Result<ValidationReport> {
    validate_meeussen_with_budget(seq, mode, DEFAULT_SUM_BUDGET)
}

/// Checks the Meeussen conditions on a finite sequence: `m_1 = 1`, strict
/// increase, subset sums covering `[0, S]`, and a unique representation of
/// every `m_i - 1`. Both modes accept exactly the same sequences.
pub fn validate_meeussen_with_budget(
    seq: &Sequence,
    mode: ValidationMode,
    budget: usize,
) -> Result<ValidationReport> {
    let mut report = ValidationReport::default();
    check_start_and_order(seq, &mut report);
    match mode {
        ValidationMode::Dp => dp_checks(seq, budget, &mut report)?,
        ValidationMode::Structural => {
            if report.is_valid() {
                structural_checks(seq, &mut report);
            }
        }
    }
    Ok(report)
}

fn dp_checks(seq: &Sequence, budget: usize, report: &mut ValidationReport) -> Result<()> {
    let profile = representation_profile_with_budget(seq, budget)?;
    let small: Vec<usize> = seq
        .terms()
        .iter()
        .map(|t| usize::try_from(t).expect("bounded by the budget"))
        .collect();

    for (lo, hi) in profile.gaps() {
        let index = small
            .iter()
            .position(|&t| t > lo)
            .unwrap_or(small.len() - 1);
        let what = if lo == hi {
            format!("{lo} is not a subset sum")
        } else {
            format!("{lo}..={hi} are not subset sums")
        };
        report.push(index, Rule::Interval, what);
    }
    for (i, &m) in small.iter().enumerate() {
        let target = m - 1;
        match profile.count(target) {
            1 => {}
            0 => report.push(
                i,
                Rule::UniqueRepresentation,
                format!("m_{} - 1 = {target} has no subset representation", i + 1),
            ),
            _ => report.push(
                i,
                Rule::UniqueRepresentation,
                format!(
                    "m_{} - 1 = {target} has two or more subset representations",
                    i + 1
                ),
            ),
        }
    }
    Ok(())
}

fn structural_checks(seq: &Sequence, report: &mut ValidationReport) {
    match phi_inverse(seq) {
        Ok(_) => {}
        Err(Error::NotMeeussen { level }) => {
            let m = &seq.terms()[level - 1];
            report.push(
                level - 1,
                Rule::Candidate,
                format!(
                    "m_{level} - 1 = {} is not uniquely representable by the earlier terms",
                    m - 1u32
                ),
            );
        }
        Err(other) => unreachable!("first term and order were already checked: {other}"),
    }
}

pub fn candidates(seq: &Sequence) -> Result<Vec<BigUint>> {
    candidates_with_budget(seq, DEFAULT_SUM_BUDGET)
}

/// Uniquely representable sums `u >= m_n` of a valid Meeussen sequence, in
/// ascending order. The legal next terms are exactly `u + 1`.
pub fn candidates_with_budget(seq: &Sequence, budget: usize) -> Result<Vec<BigUint>> {
    let report = validate_meeussen_with_budget(seq, ValidationMode::Dp, budget)?;
    if !report.is_valid() {
        return Err(Error::InvalidMeeussen(report));
    }
    let profile = representation_profile_with_budget(seq, budget)?;
    let last = usize::try_from(seq.last()).expect("bounded by the budget");
    Ok((last..=profile.total())
        .filter(|&u| profile.is_uniquely_representable(u))
        .map(BigUint::from)
        .collect())
}
