//! Word-level predicates evaluated directly on seeds.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::pattern::ClusterPattern;
use crate::quiver::Symmetry;
use crate::seed::{seeds_equal, EqualityMode, Seed, SeedError};
use crate::word::MutationWord;

use super::GroupError;

/// `mu_c`: the variables produced by the steps of a word that survive free
/// reduction, kept in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClusterSet(pub BTreeSet<LaurentPoly>);

impl ClusterSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &LaurentPoly) -> bool {
        self.0.contains(x)
    }

    /// Display forms, sorted as strings.
    pub fn display(&self) -> Vec<String> {
        let mut v: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        v.sort();
        v
    }
}

impl fmt::Display for ClusterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.display().join(", "))
    }
}

/// Indices of the steps surviving free reduction of a prefix of length `len`.
fn surviving(word: &[usize], len: usize) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::new();
    for t in 0..len {
        if stack.last().is_some_and(|&top| word[top] == word[t]) {
            stack.pop();
        } else {
            stack.push(t);
        }
    }
    stack
}

/// Cluster set of a walk given the value produced at each step.
pub(crate) fn produced_set<V: Ord + Clone>(
    word: &[usize],
    produced: &[V],
    len: usize,
) -> BTreeSet<V> {
    surviving(word, len)
        .into_iter()
        .map(|t| produced[t].clone())
        .collect()
}

/// Smallest prefix length with the same cluster set as the whole walk.
pub(crate) fn order_of<V: Ord + Clone>(word: &[usize], produced: &[V]) -> usize {
    let full = produced_set(word, produced, word.len());
    // the prefix cluster sets are not monotone (later steps may cancel), so
    // every prefix is checked
    let mut stack: Vec<usize> = Vec::new();
    for m in 0..=word.len() {
        if m > 0 {
            let t = m - 1;
            if stack.last().is_some_and(|&top| word[top] == word[t]) {
                stack.pop();
            } else {
                stack.push(t);
            }
        }
        if stack.len() >= full.len() {
            let set: BTreeSet<V> = stack.iter().map(|&t| produced[t].clone()).collect();
            if set == full {
                return m;
            }
        }
    }
    word.len()
}

/// The reduction process on an abstract walk. `root_after[t]` says whether
/// the walk is back at the root (in the chosen mode) after step `t`.
///
/// 1. Truncate to the cluster order.
/// 2. Cut at every root revisit, scanning left to right; the pieces are loop
///    factors, the remainder after the last revisit is the tail.
/// 3. Drop each factor whose own cluster set equals that of an earlier kept
///    factor.
pub(crate) fn reduce_walk<V: Ord + Clone + Hash>(
    word: &[usize],
    produced: &[V],
    root_after: &[bool],
) -> Vec<usize> {
    let m = order_of(word, produced);
    let mut factors: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for t in 0..m {
        if root_after[t] {
            factors.push((start, t + 1));
            start = t + 1;
        }
    }
    let mut kept_sets: Vec<BTreeSet<V>> = Vec::new();
    let mut out = Vec::with_capacity(m);
    for (a, b) in factors {
        let set = produced_set(&word[a..b], &produced[a..b], b - a);
        if kept_sets.contains(&set) {
            continue;
        }
        kept_sets.push(set);
        out.extend_from_slice(&word[a..b]);
    }
    out.extend_from_slice(&word[start..m]);
    out
}

/// `mu_c` for the word applied at `root`.
pub fn cluster_set(root: &Seed, w: &MutationWord) -> Result<ClusterSet, SeedError> {
    let reduced = w.free_reduced();
    let trace = root.apply_word(&reduced)?;
    Ok(ClusterSet(trace.produced.into_iter().collect()))
}

/// Smallest `m` such that the first `m` steps already have the cluster set
/// of the whole word; 0 when that set is empty.
pub fn cluster_order(root: &Seed, w: &MutationWord) -> Result<usize, SeedError> {
    let trace = root.apply_word(w)?;
    Ok(order_of(w.steps(), &trace.produced))
}

/// Witness that `w` returns `root` to itself under `mode`.
pub fn is_rooted_loop(
    root: &Seed,
    w: &MutationWord,
    mode: EqualityMode,
) -> Result<Option<Symmetry>, SeedError> {
    Ok(seeds_equal(root, &root.apply(w)?, mode))
}

/// Whether `w` fixes every node of a complete pattern, each node being
/// compared with its own image under the pattern's mode.
pub fn is_global_loop(pattern: &ClusterPattern, w: &MutationWord) -> Result<bool, GroupError> {
    if pattern.is_truncated() {
        return Err(GroupError::PatternIncomplete {
            explored: pattern.len(),
        });
    }
    for s in pattern.nodes() {
        if seeds_equal(s, &s.apply(w)?, pattern.mode()).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of comparing two words by their cluster sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    Equivalent,
    Distinct,
    /// `w2` is the reverse of the rooted loop `w1`; the relation excludes
    /// this pair.
    ExcludedReverse,
}

impl Equivalence {
    pub fn holds(self) -> bool {
        self == Equivalence::Equivalent
    }
}

/// `w1 ≡ w2` iff the cluster sets agree. The pair (loop, its reverse) is
/// excluded unless the loop is a palindrome; for words that are not rooted
/// loops the exclusion does not apply.
pub fn equivalent(
    root: &Seed,
    w1: &MutationWord,
    w2: &MutationWord,
    mode: EqualityMode,
) -> Result<Equivalence, SeedError> {
    if *w2 == w1.reversed() && !w1.is_palindrome() && is_rooted_loop(root, w1, mode)?.is_some() {
        return Ok(Equivalence::ExcludedReverse);
    }
    if cluster_set(root, w1)? == cluster_set(root, w2)? {
        Ok(Equivalence::Equivalent)
    } else {
        Ok(Equivalence::Distinct)
    }
}

/// The reduction process applied to `w` at `root`.
pub fn reduce_word(
    root: &Seed,
    w: &MutationWord,
    mode: EqualityMode,
) -> Result<MutationWord, SeedError> {
    let trace = root.apply_word(w)?;
    let root_after: Vec<bool> = trace.seeds[1..]
        .iter()
        .map(|s| seeds_equal(root, s, mode).is_some())
        .collect();
    Ok(MutationWord::new(reduce_walk(
        w.steps(),
        &trace.produced,
        &root_after,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(s: &str) -> MutationWord {
        s.parse().unwrap()
    }

    fn a2() -> Seed {
        Seed::initial(&fixtures::a2())
    }

    #[test]
    fn cluster_sets() {
        assert_eq!(
            cluster_set(&a2(), &w("1")).unwrap().display(),
            vec!["(1 + x2)/x1"]
        );
        assert!(cluster_set(&a2(), &w("1,1")).unwrap().is_empty());
        let full = cluster_set(&a2(), &w("1,2,1,2,1")).unwrap();
        assert_eq!(full.len(), 5);
        assert!(full.contains(&crate::LaurentPoly::var(2, 0)));
    }

    #[test]
    fn orders() {
        assert_eq!(cluster_order(&a2(), &w("1,1")).unwrap(), 0);
        assert_eq!(cluster_order(&a2(), &w("1")).unwrap(), 1);
        assert_eq!(cluster_order(&a2(), &w("1,2,1,2,1,1,1")).unwrap(), 5);
        assert_eq!(cluster_order(&a2(), &w("")).unwrap(), 0);
    }

    #[test]
    fn loops_and_global_loops() {
        let sym = EqualityMode::default();
        assert!(is_rooted_loop(&a2(), &w("1,2,1,2,1"), sym)
            .unwrap()
            .is_some());
        assert!(is_rooted_loop(&a2(), &w("1,2,1,2,1"), EqualityMode::Strict)
            .unwrap()
            .is_none());
        assert!(is_rooted_loop(&a2(), &w("1"), sym).unwrap().is_none());
        let strict =
            crate::pattern::enumerate_cluster_pattern(&a2(), EqualityMode::Strict, 100).unwrap();
        assert!(is_global_loop(&strict, &w("")).unwrap());
        assert!(is_global_loop(&strict, &w("1,1")).unwrap());
        assert!(!is_global_loop(&strict, &w("1,2,1,2,1")).unwrap());
    }

    #[test]
    fn equivalence_examples() {
        let sym = EqualityMode::default();
        assert_eq!(
            equivalent(&a2(), &w("1,2,1,2,1"), &w("2,1,2,1,2"), sym).unwrap(),
            Equivalence::Equivalent
        );
        let pair = Seed::initial(&fixtures::a1_power(2));
        assert_eq!(
            equivalent(&pair, &w("1,2"), &w("2,1"), sym).unwrap(),
            Equivalence::Equivalent
        );
        assert_eq!(
            equivalent(&a2(), &w("1"), &w("2"), sym).unwrap(),
            Equivalence::Distinct
        );
        let strict_loop = w("1,2,1,2");
        assert_eq!(
            equivalent(
                &pair,
                &strict_loop,
                &strict_loop.reversed(),
                EqualityMode::Strict
            )
            .unwrap(),
            Equivalence::ExcludedReverse
        );
    }

    #[test]
    fn reduction_examples() {
        let sym = EqualityMode::default();
        assert_eq!(
            reduce_word(&a2(), &w("1,2,1,2,1"), sym).unwrap(),
            w("1,2,1,2,1")
        );
        assert_eq!(
            reduce_word(&a2(), &w("1,2,1,2,1,1,2,1,2,1"), sym).unwrap(),
            w("")
        );
        // everything after the fifth step repeats known variables
        assert_eq!(
            reduce_word(&a2(), &w("1,2,1,2,1,2,1,2,1,2,1"), sym).unwrap(),
            w("1,2,1,2,1")
        );
        // duplicate loop factor removed, the tail kept
        let triple = Seed::initial(&fixtures::a1_power(3));
        assert_eq!(
            reduce_word(&triple, &w("1,2,1,2,1,2,1,2,3"), EqualityMode::Strict).unwrap(),
            w("1,2,1,2,3")
        );
    }

    #[test]
    fn five_isolated_vertices() {
        // factors [1,2,1,2]x3 [3,4,3,4] [1,3,1,3] [4,3,4,3] and tail [5]
        let root = Seed::initial(&fixtures::a1_power(5));
        let input = w("1,2,1,2,1,2,1,2,1,2,1,2,3,4,3,4,1,3,1,3,4,3,4,3,5");
        let reduced = reduce_word(&root, &input, EqualityMode::Strict).unwrap();
        assert_eq!(reduced, w("1,2,1,2,3,4,3,4,1,3,1,3,5"));
        assert_eq!(
            cluster_set(&root, &reduced).unwrap(),
            cluster_set(&root, &input).unwrap()
        );
    }
}
