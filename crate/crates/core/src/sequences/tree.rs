use super::representation::RepresentationProfile;
use super::Kind;
use crate::error::{Error, Result};

/// Default maximum depth for tree walks. Level 10 already has about
/// 6.3e8 nodes.
pub const DEFAULT_DEPTH_LIMIT: usize = 10;

/// Hard ceiling: labels and Meeussen sums must stay in machine words.
pub const MAX_DEPTH: usize = 40;

/// A node visited by [`walk_tree`]: the full prefix and its children labels.
#[derive(Debug, Clone, Copy)]
pub struct Node<'a> {
    pub terms: &'a [u64],
    pub children: &'a [u64],
}

/// Produces the ordered children labels of a node given its whole prefix.
trait ChildRule {
    fn children(&mut self, prefix: &[u64], out: &mut Vec<u64>);
    fn push(&mut self, term: u64);
    fn pop(&mut self);
}

struct TournamentRule;

impl ChildRule for TournamentRule {
    fn children(&mut self, prefix: &[u64], out: &mut Vec<u64>) {
        let k = *prefix.last().expect("non-empty prefix");
        out.clear();
        out.extend(k + 1..=2 * k);
    }

    fn push(&mut self, _: u64) {}

    fn pop(&mut self) {}
}

/// Children come from candidate sets, recomputed from subset-sum counts.
/// One profile is kept per level so extending is a single convolution.
struct MeeussenRule {
    profiles: Vec<RepresentationProfile>,
}

impl MeeussenRule {
    fn new() -> Self {
        let mut root = RepresentationProfile::empty();
        root.extend(1);
        MeeussenRule {
            profiles: vec![root],
        }
    }
}

impl ChildRule for MeeussenRule {
    fn children(&mut self, prefix: &[u64], out: &mut Vec<u64>) {
        let profile = self.profiles.last().expect("root profile");
        let last = *prefix.last().expect("non-empty prefix") as usize;
        out.clear();
        out.extend(
            (last..=profile.total())
                .filter(|&u| profile.is_uniquely_representable(u))
                .map(|u| u as u64 + 1),
        );
    }

    fn push(&mut self, term: u64) {
        let mut next = self.profiles.last().expect("root profile").clone();
        next.extend(term as usize);
        self.profiles.push(next);
    }

    fn pop(&mut self) {
        self.profiles.pop();
    }
}

struct Walker<'v, R> {
    rule: R,
    depth: usize,
    prefix: Vec<u64>,
    buffers: Vec<Vec<u64>>,
    visit: &'v mut dyn FnMut(Node<'_>),
    leaves_only: bool,
    leaves: u64,
}

impl<R: ChildRule> Walker<'_, R> {
    fn run(&mut self) {
        self.prefix.push(1);
        self.descend();
    }

    fn descend(&mut self) {
        let level = self.prefix.len();
        if level == self.depth {
            self.leaves += 1;
            if self.leaves_only {
                (self.visit)(Node {
                    terms: &self.prefix,
                    children: &[],
                });
                return;
            }
        }
        let mut children = std::mem::take(&mut self.buffers[level - 1]);
        self.rule.children(&self.prefix, &mut children);
        if !self.leaves_only {
            (self.visit)(Node {
                terms: &self.prefix,
                children: &children,
            });
        }
        if level < self.depth {
            for &child in &children {
                self.rule.push(child);
                self.prefix.push(child);
                self.descend();
                self.prefix.pop();
                self.rule.pop();
            }
        }
        self.buffers[level - 1] = children;
    }
}

fn check_depth(depth: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_DEPTH);
    if depth == 0 || depth > limit {
        return Err(Error::LimitExceeded {
            what: "tree depth",
            requested: depth,
            limit,
        });
    }
    Ok(())
}

fn walk(kind: Kind, depth: usize, leaves_only: bool, visit: &mut dyn FnMut(Node<'_>)) -> u64 {
    fn go<R: ChildRule>(
        rule: R,
        depth: usize,
        leaves_only: bool,
        visit: &mut dyn FnMut(Node<'_>),
    ) -> u64 {
        let mut w = Walker {
            rule,
            depth,
            prefix: Vec::with_capacity(depth),
            buffers: vec![Vec::new(); depth],
            visit,
            leaves_only,
            leaves: 0,
        };
        w.run();
        w.leaves
    }
    match kind {
        Kind::Tournament => go(TournamentRule, depth, leaves_only, visit),
        Kind::Meeussen => go(MeeussenRule::new(), depth, leaves_only, visit),
    }
}

pub fn enumerate_tree(kind: Kind, depth: usize, visitor: impl FnMut(&[u64])) -> Result<u64> {
    enumerate_tree_with_limit(kind, depth, DEFAULT_DEPTH_LIMIT, visitor)
}

/// Visits every sequence of exactly `depth` terms in lexicographic order
/// and returns how many there were.
///
/// Meeussen children are derived from the full prefix, never from the last
/// label alone: `(1,2,3,5)` and `(1,2,4,5)` end alike but branch differently.
pub fn enumerate_tree_with_limit(
    kind: Kind,
    depth: usize,
    limit: usize,
    mut visitor: impl FnMut(&[u64]),
) -> Result<u64> {
    check_depth(depth, limit)?;
    Ok(walk(kind, depth, true, &mut |node| visitor(node.terms)))
}

pub fn walk_tree(kind: Kind, depth: usize, visitor: impl FnMut(Node<'_>)) -> Result<()> {
    walk_tree_with_limit(kind, depth, DEFAULT_DEPTH_LIMIT, visitor)
}

/// Preorder walk over every node of levels `1..=depth`, children ascending.
/// Each node is reported with its children labels, including at `depth`.
pub fn walk_tree_with_limit(
    kind: Kind,
    depth: usize,
    limit: usize,
    mut visitor: impl FnMut(Node<'_>),
) -> Result<()> {
    check_depth(depth, limit)?;
    walk(kind, depth, false, &mut visitor);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_labels(kind: Kind, depth: usize) -> Vec<u64> {
        let mut labels = Vec::new();
        enumerate_tree(kind, depth, |s| labels.push(*s.last().unwrap())).unwrap();
        labels
    }

    #[test]
    fn fourth_rows() {
        assert_eq!(last_labels(Kind::Tournament, 4), vec![4, 5, 6, 5, 6, 7, 8]);
        assert_eq!(last_labels(Kind::Meeussen, 4), vec![5, 6, 7, 5, 6, 7, 8]);
    }

    #[test]
    fn root_only() {
        let mut seen = Vec::new();
        let n = enumerate_tree(Kind::Tournament, 1, |s| seen.push(s.to_vec())).unwrap();
        assert_eq!(n, 1);
        assert_eq!(seen, vec![vec![1]]);
    }

    #[test]
    fn fifth_meeussen_row_keys_on_prefix() {
        let mut children = std::collections::HashMap::new();
        walk_tree(Kind::Meeussen, 4, |node| {
            if node.terms.len() == 4 {
                children.insert(node.terms.to_vec(), node.children.to_vec());
            }
        })
        .unwrap();
        assert_eq!(children[&vec![1, 2, 3, 5]], vec![8, 10, 11, 12]);
        assert_eq!(children[&vec![1, 2, 4, 5]], vec![9, 10, 11, 12, 13]);
    }

    #[test]
    fn leaves_come_out_sorted() {
        for kind in [Kind::Tournament, Kind::Meeussen] {
            let mut all = Vec::new();
            enumerate_tree(kind, 6, |s| all.push(s.to_vec())).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(all.len(), 397);
        }
    }

    #[test]
    fn depth_limits() {
        assert!(enumerate_tree(Kind::Tournament, 0, |_| {}).is_err());
        assert!(enumerate_tree(Kind::Tournament, 11, |_| {}).is_err());
        assert!(enumerate_tree_with_limit(Kind::Tournament, 11, 5, |_| {}).is_err());
        assert!(enumerate_tree_with_limit(Kind::Tournament, 3, 5, |_| {}).is_ok());
    }
}
