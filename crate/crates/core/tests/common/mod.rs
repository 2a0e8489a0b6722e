//! Checks shared by the integration tests and the acceptance binary. Each
//! returns a short summary on success and a description of the first
//! failure otherwise.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::{BigUint, RandBigInt};
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tournament_core::bijection::{check_kbonacci, check_lemma_tm};
use tournament_core::sequences::{
    enumerate_tree, representation_profile, validate_meeussen, walk_tree, ValidationMode,
};
use tournament_core::{phi, phi_inverse, BijectionState, Kind, Sequence};

pub type Check<T = String> = Result<T, String>;

pub fn seq(terms: &[u64]) -> Sequence {
    Sequence::from_u64s(terms).unwrap()
}

/// A tournament sequence of `len` terms, each child drawn uniformly.
pub fn random_tournament(rng: &mut ChaCha8Rng, len: usize) -> Sequence {
    extend_randomly(rng, vec![BigUint::one()], len)
}

/// Continues a tournament prefix to `len` terms with uniform children.
pub fn extend_randomly(rng: &mut ChaCha8Rng, mut terms: Vec<BigUint>, len: usize) -> Sequence {
    while terms.len() < len {
        let t = terms.last().unwrap();
        let next = rng.gen_biguint_range(&(t + 1u32), &((t << 1u32) + 1u32));
        terms.push(next);
    }
    Sequence::new(terms).unwrap()
}

/// Extends `start` to `len` terms, each new term being `offset` plus the sum
/// of the previous `k`.
pub fn recurrence(start: &[u64], k: usize, offset: u64, len: usize) -> Sequence {
    let mut terms: Vec<BigUint> = start.iter().map(|&x| BigUint::from(x)).collect();
    while terms.len() < len {
        let next = terms[terms.len() - k..].iter().sum::<BigUint>() + offset;
        terms.push(next);
    }
    Sequence::new(terms).unwrap()
}

pub fn powers_of_two(len: usize) -> Sequence {
    Sequence::new((0..len).map(|i| BigUint::one() << i).collect()).unwrap()
}

/// Every node of the tree to `depth`, in preorder, with its children.
pub fn nodes(kind: Kind, depth: usize) -> Vec<(Vec<u64>, Vec<u64>)> {
    let mut out = Vec::new();
    walk_tree(kind, depth, |node| {
        out.push((node.terms.to_vec(), node.children.to_vec()))
    })
    .unwrap();
    out
}

/// Round trip for every tournament sequence of length `<= depth`, carried
/// along the tree walk: one state maps each new jump forward, a second
/// recovers the jump from the new Meeussen term alone.
pub fn round_trip_sweep(depth: usize) -> Check<u64> {
    let mut forward = BijectionState::new();
    let mut backward = BijectionState::new();
    let mut checked = 0u64;
    let mut failure = None;
    walk_tree(Kind::Tournament, depth, |node| {
        if failure.is_some() {
            return;
        }
        checked += 1;
        let len = node.terms.len();
        if len == 1 {
            return;
        }
        forward.truncate(len - 1);
        backward.truncate(len - 1);
        let jump = BigUint::from(node.terms[len - 1] - node.terms[len - 2]);
        let m = forward.extend(&jump).unwrap().clone();
        match backward.extend_with_meeussen_term(&m) {
            Ok(t) if *t == BigUint::from(node.terms[len - 1]) => {}
            other => failure = Some(format!("{:?}: recovered {other:?}", node.terms)),
        }
    })
    .unwrap();
    match failure {
        Some(f) => Err(f),
        None => Ok(checked),
    }
}

/// `phi_inverse(phi(T)) == T` through the public functions, for every `T`
/// of length `<= depth`.
pub fn round_trip_direct(depth: usize) -> Check<u64> {
    let mut checked = 0u64;
    for len in 1..=depth {
        let mut failure = None;
        enumerate_tree(Kind::Tournament, len, |terms| {
            if failure.is_some() {
                return;
            }
            checked += 1;
            let t = seq(terms);
            match phi(&t).and_then(|m| phi_inverse(&m)) {
                Ok(back) if back == t => {}
                other => failure = Some(format!("{t}: {other:?}")),
            }
        })
        .unwrap();
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(checked)
}

pub fn random_round_trips(count: usize, len: usize, rng: &mut ChaCha8Rng) -> Check<()> {
    for _ in 0..count {
        let t = random_tournament(rng, len);
        let m = phi(&t).map_err(|e| format!("phi({t}): {e}"))?;
        let back = phi_inverse(&m).map_err(|e| format!("phi_inverse({m}): {e}"))?;
        if back != t {
            return Err(format!("{t} came back as {back}"));
        }
    }
    Ok(())
}

/// Walks both trees side by side. At every position the Meeussen node must
/// be `phi` of the tournament node, and its candidate count must equal the
/// tournament label. Returns the number of positions.
pub fn oracle_agreement(depth: usize) -> Check<usize> {
    let tournament = nodes(Kind::Tournament, depth);
    let meeussen = nodes(Kind::Meeussen, depth);
    if tournament.len() != meeussen.len() {
        return Err(format!("{} vs {} nodes", tournament.len(), meeussen.len()));
    }
    for ((t, _), (m, m_children)) in tournament.iter().zip(&meeussen) {
        let image = phi(&seq(t)).map_err(|e| e.to_string())?;
        if image != seq(m) {
            return Err(format!("phi({t:?}) = {image}, tree has {m:?}"));
        }
        if m_children.len() as u64 != *t.last().unwrap() {
            return Err(format!(
                "{m:?} has {} candidates, t_n = {}",
                m_children.len(),
                t.last().unwrap()
            ));
        }
    }
    Ok(tournament.len())
}

/// Per level, the sorted children counts of both trees coincide.
pub fn tree_shapes(depth: usize) -> Check<()> {
    let shape = |kind| {
        let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (terms, children) in nodes(kind, depth) {
            levels.entry(terms.len()).or_default().push(children.len());
        }
        levels.values_mut().for_each(|v| v.sort_unstable());
        levels
    };
    let (t, m) = (shape(Kind::Tournament), shape(Kind::Meeussen));
    for (level, counts) in &t {
        if m.get(level) != Some(counts) {
            return Err(format!("level {level} differs"));
        }
    }
    Ok(())
}

/// On every Meeussen node to `depth`:
/// extending by `u_j + 1` gives a Meeussen sequence with `k + j` candidates,
/// the counts array is symmetric under `t -> S - t`, and the uniquely
/// representable values below `m_n` are `S - u` over the candidates `u`.
pub fn extension_structure(depth: usize) -> Check<usize> {
    let all = nodes(Kind::Meeussen, depth);
    let by_prefix: BTreeMap<&[u64], &[u64]> = all
        .iter()
        .map(|(t, c)| (t.as_slice(), c.as_slice()))
        .collect();
    for (terms, children) in &all {
        let m = seq(terms);
        let report = validate_meeussen(&m, ValidationMode::Dp).map_err(|e| e.to_string())?;
        if !report.is_valid() {
            return Err(format!("{m} is not Meeussen: {report}"));
        }
        let profile = representation_profile(&m).map_err(|e| e.to_string())?;
        let total = profile.total();
        if (0..=total).any(|t| profile.count(t) != profile.count(total - t)) {
            return Err(format!("{m}: counts not symmetric"));
        }
        let last = *terms.last().unwrap() as usize;
        let below: Vec<usize> = profile
            .uniquely_representable()
            .into_iter()
            .filter(|&u| u < last)
            .collect();
        let mut mirrored: Vec<usize> = children.iter().map(|&c| total - (c as usize - 1)).collect();
        mirrored.sort_unstable();
        if below != mirrored {
            return Err(format!(
                "{m}: ur below m_n is {below:?}, mirror is {mirrored:?}"
            ));
        }
        if let Some(parent) = by_prefix.get(&terms[..terms.len() - 1]) {
            let j = parent.iter().position(|&c| c == last as u64).unwrap() + 1;
            if children.len() != parent.len() + j {
                return Err(format!(
                    "{m}: {} candidates, expected {} + {j}",
                    children.len(),
                    parent.len()
                ));
            }
        }
    }
    Ok(all.len())
}

/// The rank identities between `T` and `ur(phi(T))` for every `T` to `depth`.
pub fn rank_identity_sweep(depth: usize) -> Check<usize> {
    let all = nodes(Kind::Tournament, depth);
    for (terms, _) in &all {
        let report = check_lemma_tm(&seq(terms)).map_err(|e| e.to_string())?;
        if !report.is_valid() {
            return Err(format!("{terms:?}: {report}"));
        }
    }
    Ok(all.len())
}

/// Random tournament prefixes continued by `t_{n+1} = 2 t_n - t_{n-k}`,
/// optionally followed by further random terms.
pub fn kbonacci_random(count: usize, rng: &mut ChaCha8Rng) -> Check<()> {
    for _ in 0..count {
        let n = rng.gen_range(2..=24);
        let k = rng.gen_range(1..n);
        let mut terms = random_tournament(rng, n).into_terms();
        let next = (&terms[n - 1] << 1u32) - &terms[n - k - 1];
        terms.push(next);
        for _ in 0..rng.gen_range(0..4) {
            let t = terms.last().unwrap();
            let next = rng.gen_biguint_range(&(t + 1u32), &((t << 1u32) + 1u32));
            terms.push(next);
        }
        let t = Sequence::new(terms).unwrap();
        match check_kbonacci(&t, n, k) {
            Ok(true) => {}
            other => return Err(format!("{t} with n = {n}, k = {k}: {other:?}")),
        }
    }
    Ok(())
}
