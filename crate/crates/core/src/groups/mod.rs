//! Rooted mutation loops, the rooted mutation group and its cosets.
//!
//! Group elements are keyed by cluster sets. Walks are evaluated on the
//! strict pattern (actual seeds), so a word always means the same thing
//! whatever the equality mode; the mode only decides which nodes count as
//! the root.
//!
//! A loop `a` with witness `sigma` ends at `sigma(root)`, so a second loop
//! `b` is followed from there with its labels moved by `sigma`. The product
//! word is `a` then `sigma(b)` and the inverse is `sigma^-1(reverse(a))`.
//! Under strict equality `sigma` is the identity and these are plain
//! concatenation and reversal.

mod words;

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pattern::{
    enumerate_cluster_pattern, weight_obstruction, ClusterPattern, InfiniteReason,
    DEFAULT_PATTERN_CAP,
};
use crate::quiver::Symmetry;
use crate::seed::{seeds_equal, EqualityMode, Seed, SeedError};
use crate::word::MutationWord;

pub use words::{
    cluster_order, cluster_set, equivalent, is_global_loop, is_rooted_loop, reduce_word,
    ClusterSet, Equivalence,
};

/// Largest number of cluster variables the group routines handle; cluster
/// sets are stored as 128-bit masks.
pub const MAX_GROUP_VARIABLES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error("seed is of infinite type: {0}")]
    Infinite(InfiniteReason),
    #[error("cluster pattern incomplete after {explored} nodes; raise the pattern cap")]
    PatternIncomplete { explored: usize },
    #[error("{count} cluster variables exceed the supported maximum of {MAX_GROUP_VARIABLES}")]
    TooManyVariables { count: usize },
    #[error("more than {limit} group elements")]
    TooManyElements { limit: usize },
    #[error("word {0} does not return to the root")]
    NotALoop(MutationWord),
}

/// Enumeration limits for [`compute_rooted_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCaps {
    /// Longest walk searched for loops; `None` means
    /// `2 * (pattern nodes in the chosen mode) * rank`.
    pub max_walk_len: Option<usize>,
    pub max_elements: usize,
    pub pattern_cap: usize,
}

impl Default for GroupCaps {
    fn default() -> Self {
        Self {
            max_walk_len: None,
            max_elements: 10_000,
            pattern_cap: DEFAULT_PATTERN_CAP,
        }
    }
}

/// Strict cluster pattern flattened for fast walks. Variables are bits.
#[derive(Debug, Clone)]
pub(crate) struct WalkIndex {
    n: usize,
    pattern: ClusterPattern,
    next: Vec<u32>,
    bit: Vec<u8>,
    root_like: Vec<Option<Symmetry>>,
    mode_nodes: usize,
}

/// A walk evaluated on the index.
#[derive(Debug, Clone)]
pub(crate) struct Walk {
    pub end: usize,
    pub mask: u128,
    pub produced: Vec<u8>,
    pub root_after: Vec<bool>,
}

impl WalkIndex {
    pub(crate) fn build(
        root: &Seed,
        mode: EqualityMode,
        pattern_cap: usize,
    ) -> Result<Self, GroupError> {
        if let Some(reason) = weight_obstruction(&root.quiver, pattern_cap) {
            return Err(GroupError::Infinite(reason));
        }
        let pattern = enumerate_cluster_pattern(root, EqualityMode::Strict, pattern_cap)?;
        if pattern.is_truncated() {
            return Err(GroupError::PatternIncomplete {
                explored: pattern.len(),
            });
        }
        if pattern.variables().len() > MAX_GROUP_VARIABLES {
            return Err(GroupError::TooManyVariables {
                count: pattern.variables().len(),
            });
        }
        let n = root.n();
        let mut next = vec![u32::MAX; pattern.len() * n];
        let mut bit = vec![u8::MAX; pattern.len() * n];
        for node in 0..pattern.len() {
            for &k in pattern.directions() {
                next[node * n + k] = pattern.next(node, k).expect("complete pattern") as u32;
                bit[node * n + k] = pattern.produced(node, k).expect("complete pattern") as u8;
            }
        }
        let root_like = pattern
            .nodes()
            .iter()
            .map(|s| seeds_equal(root, s, mode))
            .collect();
        let mode_nodes = if mode == EqualityMode::Strict {
            pattern.len()
        } else {
            enumerate_cluster_pattern(root, mode, pattern_cap)?.len()
        };
        Ok(Self {
            n,
            pattern,
            next,
            bit,
            root_like,
            mode_nodes,
        })
    }

    pub(crate) fn walk(&self, word: &[usize]) -> Walk {
        let mut node = 0usize;
        let mut produced = Vec::with_capacity(word.len());
        let mut root_after = Vec::with_capacity(word.len());
        for &k in word {
            let i = node * self.n + k;
            produced.push(self.bit[i]);
            node = self.next[i] as usize;
            root_after.push(self.root_like[node].is_some());
        }
        let mask = words::produced_set(word, &produced, word.len())
            .into_iter()
            .fold(0u128, |m, b| m | (1u128 << b));
        Walk {
            end: node,
            mask,
            produced,
            root_after,
        }
    }

    fn cluster_set_of(&self, mask: u128) -> ClusterSet {
        ClusterSet(
            (0..128u32)
                .filter(|b| mask & (1u128 << b) != 0)
                .map(|b| self.pattern.variable(b).clone())
                .collect(),
        )
    }

    fn reduce(&self, word: &[usize]) -> Vec<usize> {
        let w = self.walk(word);
        words::reduce_walk(word, &w.produced, &w.root_after)
    }
}

/// One element of the rooted mutation group: a cluster set and the first
/// loop found with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElement {
    pub cluster_set: ClusterSet,
    pub word: MutationWord,
    /// Witness carrying the root onto the seed the word reaches.
    pub witness: Symmetry,
    #[serde(skip)]
    mask: u128,
}

/// `M(Q)` with its Cayley table.
#[derive(Debug, Clone)]
pub struct RootedMutationGroup {
    root: Seed,
    mode: EqualityMode,
    elements: Vec<GroupElement>,
    cayley: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    caps: GroupCaps,
    converged: bool,
    loop_classes: usize,
    states_explored: usize,
    pattern_nodes: usize,
}

impl RootedMutationGroup {
    pub fn root(&self) -> &Seed {
        &self.root
    }

    pub fn mode(&self) -> EqualityMode {
        self.mode
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Element 0 is the identity (empty cluster set).
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    /// Class of the inverse word.
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Caps with `max_walk_len` resolved.
    pub fn caps(&self) -> GroupCaps {
        self.caps
    }

    /// The walk search exhausted its state space, or one extra sweep of the
    /// same length found no new class.
    pub fn converged(&self) -> bool {
        self.converged
    }

    /// Classes found directly as loops, before closing under products.
    pub fn loop_classes(&self) -> usize {
        self.loop_classes
    }

    pub fn states_explored(&self) -> usize {
        self.states_explored
    }

    /// Product word of two elements' representatives.
    pub fn product_word(&self, a: usize, b: usize) -> MutationWord {
        product_word(&self.elements[a], &self.elements[b].word)
    }

    /// Inverse word of an element's representative.
    pub fn inverse_word(&self, a: usize) -> MutationWord {
        inverse_word(&self.elements[a])
    }

    /// Node count of the cluster pattern in the group's mode.
    pub fn pattern_nodes(&self) -> usize {
        self.pattern_nodes
    }

    pub fn element_of(&self, cs: &ClusterSet) -> Option<usize> {
        self.elements.iter().position(|e| e.cluster_set == *cs)
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.order();
        (0..k).all(|a| (0..a).all(|b| self.cayley[a][b] == self.cayley[b][a]))
    }

    /// Full associativity check, cubic in the order.
    pub fn is_associative(&self) -> bool {
        let k = self.order();
        (0..k).all(|a| {
            (0..k).all(|b| {
                (0..k)
                    .all(|c| self.cayley[self.cayley[a][b]][c] == self.cayley[a][self.cayley[b][c]])
            })
        })
    }

    /// Elements `a` with `a * a = a` other than the identity.
    pub fn idempotents(&self) -> Vec<usize> {
        (1..self.order())
            .filter(|&a| self.cayley[a][a] == a)
            .collect()
    }

    /// Identity row/column, inverses, and every row a permutation.
    pub fn satisfies_group_axioms(&self) -> bool {
        let k = self.order();
        let identity = (0..k).all(|a| self.cayley[0][a] == a && self.cayley[a][0] == a);
        let inverses = (0..k).all(|a| self.cayley[a][self.inverse[a]] == 0);
        let latin = self.cayley.iter().all(|row| {
            let mut seen = vec![false; k];
            row.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        });
        identity && inverses && latin
    }
}

fn product_word(a: &GroupElement, b: &MutationWord) -> MutationWord {
    let sigma = &a.witness.permutation;
    a.word.then(&b.relabeled(|k| sigma.apply(k)))
}

fn inverse_word(a: &GroupElement) -> MutationWord {
    let back = a.witness.permutation.inverse();
    a.word.reversed().relabeled(|k| back.apply(k))
}

struct Closure<'a> {
    index: &'a WalkIndex,
    elements: Vec<GroupElement>,
    by_mask: HashMap<u128, usize>,
    max_elements: usize,
}

impl<'a> Closure<'a> {
    fn new(index: &'a WalkIndex, max_elements: usize) -> Self {
        let identity = GroupElement {
            cluster_set: ClusterSet::default(),
            word: MutationWord::empty(),
            witness: index.root_like[0].clone().expect("root is root-like"),
            mask: 0,
        };
        Self {
            index,
            elements: vec![identity],
            by_mask: HashMap::from([(0, 0)]),
            max_elements,
        }
    }

    /// Class of the loop `word`, adding it when new.
    fn classify(&mut self, word: &MutationWord) -> Result<usize, GroupError> {
        let free = word.free_reduced();
        let walk = self.index.walk(free.steps());
        let Some(witness) = self.index.root_like[walk.end].clone() else {
            return Err(GroupError::NotALoop(word.clone()));
        };
        if let Some(&e) = self.by_mask.get(&walk.mask) {
            return Ok(e);
        }
        if self.elements.len() >= self.max_elements {
            return Err(GroupError::TooManyElements {
                limit: self.max_elements,
            });
        }
        // prefer the reduced word when it keeps the class and stays a loop
        let reduced = self.index.reduce(free.steps());
        let rw = self.index.walk(&reduced);
        let (rep, witness) = match &self.index.root_like[rw.end] {
            Some(w) if rw.mask == walk.mask => (reduced, w.clone()),
            _ => (free.steps().to_vec(), witness),
        };
        let e = self.elements.len();
        self.elements.push(GroupElement {
            cluster_set: self.index.cluster_set_of(walk.mask),
            word: MutationWord::new(rep),
            witness,
            mask: walk.mask,
        });
        self.by_mask.insert(walk.mask, e);
        Ok(e)
    }

    /// Closes under products and inverses, then fills the table.
    fn finish(
        mut self,
        root: &Seed,
        mode: EqualityMode,
        caps: GroupCaps,
        converged: bool,
        loop_classes: usize,
        states_explored: usize,
    ) -> Result<RootedMutationGroup, GroupError> {
        let mut cayley: Vec<Vec<usize>> = Vec::new();
        let mut inverse = Vec::new();
        // rows are filled as elements appear; new elements extend earlier rows
        let mut done = 0;
        while done < self.elements.len() {
            let a = done;
            done += 1;
            let inv = inverse_word(&self.elements[a]);
            inverse.push(self.classify(&inv)?);
            cayley.push(Vec::new());
            for b in 0..=a {
                let ab = product_word(&self.elements[a], &self.elements[b].word);
                let c = self.classify(&ab)?;
                cayley[a].push(c);
                if b < a {
                    let ba = product_word(&self.elements[b], &self.elements[a].word);
                    let c = self.classify(&ba)?;
                    cayley[b].push(c);
                }
            }
        }
        Ok(RootedMutationGroup {
            root: root.clone(),
            mode,
            elements: self.elements,
            cayley,
            inverse,
            caps,
            converged,
            loop_classes,
            states_explored,
            pattern_nodes: self.index.mode_nodes,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct WalkState {
    node: u32,
    last: u8,
    mask: u128,
}

const NO_STEP: u8 = u8::MAX;

/// Breadth-first search over reduced walks from the root, deduplicated on
/// `(node, last step, cluster set)`. Returns first-found loop words per
/// class, the number of states seen, and whether the space was exhausted
/// within `limit` steps.
fn search_loops(index: &WalkIndex, limit: usize) -> (Vec<(u128, Vec<usize>)>, usize, bool) {
    let start = WalkState {
        node: 0,
        last: NO_STEP,
        mask: 0,
    };
    let mut states = vec![(start, u32::MAX, NO_STEP)];
    let mut seen: HashSet<WalkState> = HashSet::from([start]);
    let mut classes: HashSet<u128> = HashSet::from([0]);
    let mut found = Vec::new();
    let mut layer: Vec<u32> = vec![0];
    let mut depth = 0;
    let dirs = index.pattern.directions().to_vec();
    while !layer.is_empty() && depth < limit {
        let mut next_layer = Vec::new();
        for &s in &layer {
            let st = states[s as usize].0;
            for &k in &dirs {
                if st.last as usize == k {
                    continue;
                }
                let i = st.node as usize * index.n + k;
                let node = index.next[i];
                let mask = st.mask | (1u128 << index.bit[i]);
                let ns = WalkState {
                    node,
                    last: k as u8,
                    mask,
                };
                if !seen.insert(ns) {
                    continue;
                }
                let id = states.len() as u32;
                states.push((ns, s, k as u8));
                next_layer.push(id);
                if index.root_like[node as usize].is_some() && classes.insert(mask) {
                    let mut word = Vec::new();
                    let mut cur = id;
                    while cur != 0 {
                        let (_, parent, step) = states[cur as usize];
                        word.push(step as usize);
                        cur = parent;
                    }
                    word.reverse();
                    found.push((mask, word));
                }
            }
        }
        layer = next_layer;
        depth += 1;
    }
    (found, states.len(), layer.is_empty())
}

/// Enumerates loop classes by walks of length at most `max_walk_len`, then
/// closes the class set under concatenation and reversal.
pub fn compute_rooted_group(
    root: &Seed,
    mode: EqualityMode,
    caps: GroupCaps,
) -> Result<RootedMutationGroup, GroupError> {
    let index = WalkIndex::build(root, mode, caps.pattern_cap)?;
    let limit = caps
        .max_walk_len
        .unwrap_or(2 * index.mode_nodes * root.quiver.rank().max(1));
    let caps = GroupCaps {
        max_walk_len: Some(limit),
        ..caps
    };
    let (found, states, exhausted) = search_loops(&index, limit);
    let converged = exhausted || {
        let (more, _, _) = search_loops(&index, limit.saturating_mul(2));
        more.len() == found.len()
    };
    let mut closure = Closure::new(&index, caps.max_elements);
    for (_, word) in found {
        closure.classify(&MutationWord::new(word))?;
    }
    let loop_classes = closure.elements.len();
    closure.finish(root, mode, caps, converged, loop_classes, states)
}

/// A rooted loop together with its witness and cluster set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedLoop {
    pub word: MutationWord,
    pub witness: Symmetry,
    pub cluster_set: ClusterSet,
}

/// All nonempty freely reduced loops of length at most `max_len`, shortest
/// first, stopping after `limit` loops.
pub fn enumerate_rooted_loops(
    root: &Seed,
    mode: EqualityMode,
    max_len: usize,
    limit: usize,
) -> Result<Vec<RootedLoop>, GroupError> {
    let index = WalkIndex::build(root, mode, DEFAULT_PATTERN_CAP)?;
    let dirs = index.pattern.directions().to_vec();
    let mut out = Vec::new();
    let mut layer: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, node) in &layer {
            for &k in &dirs {
                if word.last() == Some(&k) {
                    continue;
                }
                let to = index.next[node * index.n + k] as usize;
                let mut w = word.clone();
                w.push(k);
                if let Some(witness) = &index.root_like[to] {
                    let walk = index.walk(&w);
                    out.push(RootedLoop {
                        word: MutationWord::new(w.clone()),
                        witness: witness.clone(),
                        cluster_set: index.cluster_set_of(walk.mask),
                    });
                    if out.len() >= limit {
                        return Ok(out);
                    }
                }
                next.push((w, to));
            }
        }
        layer = next;
    }
    Ok(out)
}

/// `M(Q')` for `Q' = w(Q)`, built from the conjugates
/// `reverse(w) · mu · sigma(w)` of the representatives of `g`.
#[derive(Debug, Clone)]
pub struct RebasedGroup {
    pub group: RootedMutationGroup,
    /// `image[i]` is the element of `group` containing the conjugate of
    /// element `i` of the original group.
    pub image: Vec<usize>,
}

impl RebasedGroup {
    pub fn is_injective(&self) -> bool {
        let set: HashSet<usize> = self.image.iter().copied().collect();
        set.len() == self.image.len()
    }
}

pub fn rebase_group(g: &RootedMutationGroup, w: &MutationWord) -> Result<RebasedGroup, GroupError> {
    let new_root = g.root.apply(w)?;
    let index = WalkIndex::build(&new_root, g.mode, g.caps.pattern_cap)?;
    let mut closure = Closure::new(&index, g.caps.max_elements);
    let back = w.reversed();
    let mut image = Vec::with_capacity(g.order());
    for e in &g.elements {
        let conj = back.then(&product_word(e, w));
        image.push(closure.classify(&conj)?);
    }
    let loop_classes = closure.elements.len();
    let group = closure.finish(&new_root, g.mode, g.caps, g.converged, loop_classes, 0)?;
    Ok(RebasedGroup { group, image })
}

/// One coset per pattern node, keyed by the node it reaches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coset {
    pub node: usize,
    pub word: MutationWord,
}

/// `M / M(Q)` indexed by destination seeds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetSet {
    pub cosets: Vec<Coset>,
    pub complete: bool,
    /// Cosets whose reduced word would land elsewhere and so keep the
    /// breadth-first word.
    pub unreduced: usize,
}

impl CosetSet {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// Breadth-first search over actual seeds; the first word reaching each node
/// of the `mode` pattern represents its coset and is then reduced, provided
/// the reduced word reaches the same node.
pub fn coset_set(
    root: &Seed,
    mode: EqualityMode,
    pattern_cap: usize,
) -> Result<CosetSet, GroupError> {
    if let Some(reason) = weight_obstruction(&root.quiver, pattern_cap) {
        return Err(GroupError::Infinite(reason));
    }
    let pattern = enumerate_cluster_pattern(root, mode, pattern_cap)?;
    let strict = if mode == EqualityMode::Strict {
        pattern.clone()
    } else {
        enumerate_cluster_pattern(root, EqualityMode::Strict, pattern_cap)?
    };
    let complete = !pattern.is_truncated() && !strict.is_truncated();
    let mut words: Vec<Option<MutationWord>> = vec![None; pattern.len()];
    let mut seen = vec![false; strict.len()];
    let mut queue = VecDeque::from([(0usize, MutationWord::empty())]);
    seen[0] = true;
    while let Some((at, word)) = queue.pop_front() {
        if let Some((node, _)) = pattern.locate(strict.node(at)) {
            if words[node].is_none() {
                words[node] = Some(word.clone());
            }
        }
        for &k in strict.directions() {
            if let Some(to) = strict.next(at, k) {
                if !seen[to] {
                    seen[to] = true;
                    let mut steps = word.steps().to_vec();
                    steps.push(k);
                    queue.push_back((to, MutationWord::new(steps)));
                }
            }
        }
    }
    let mut cosets = Vec::with_capacity(pattern.len());
    let mut unreduced = 0;
    for (node, word) in words.into_iter().enumerate() {
        let Some(word) = word else { continue };
        let reduced = reduce_word(root, &word, mode)?;
        let lands = pattern.locate(&root.apply(&reduced)?).map(|(n, _)| n) == Some(node);
        let word = if lands {
            reduced
        } else {
            unreduced += 1;
            word
        };
        cosets.push(Coset { node, word });
    }
    Ok(CosetSet {
        cosets,
        complete,
        unreduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(s: &str) -> MutationWord {
        s.parse().unwrap()
    }

    #[test]
    fn a2_symmetric_group_has_order_two() {
        let root = Seed::initial(&fixtures::a2());
        let g = compute_rooted_group(&root, EqualityMode::default(), GroupCaps::default()).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.converged());
        assert!(g.elements()[0].cluster_set.is_empty());
        let full = cluster_set(&root, &w("1,2,1,2,1")).unwrap();
        assert_eq!(g.element_of(&full), Some(1));
        assert_eq!(
            g.element_of(&cluster_set(&root, &w("2,1,2,1,2")).unwrap()),
            Some(1)
        );
        assert!(g.is_commutative());
        assert_eq!(g.pattern_nodes(), 5);
        // the nontrivial class squares to itself, while its inverse word
        // cancels it completely
        assert_eq!(g.product(1, 1), 1);
        assert_eq!(g.idempotents(), vec![1]);
        let back = product_word(&g.elements()[1], &g.inverse_word(1));
        assert!(cluster_set(&root, &back).unwrap().is_empty());
        assert!(!g.satisfies_group_axioms());
    }

    #[test]
    fn symmetric_products_stay_loops() {
        let root = Seed::initial(&fixtures::a3());
        let g = compute_rooted_group(&root, EqualityMode::default(), GroupCaps::default()).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.order(), g.loop_classes());
        for a in 0..g.order() {
            for b in 0..g.order() {
                let w = g.product_word(a, b);
                assert!(
                    is_rooted_loop(&root, &w, g.mode()).unwrap().is_some(),
                    "{w}"
                );
            }
        }
    }

    #[test]
    fn rank_one_group_is_trivial() {
        let root = Seed::initial(&fixtures::a1_power(1));
        let g = compute_rooted_group(&root, EqualityMode::default(), GroupCaps::default()).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.converged());
    }

    #[test]
    fn infinite_type_rejected() {
        let root = Seed::initial(&fixtures::w4());
        let err =
            compute_rooted_group(&root, EqualityMode::default(), GroupCaps::default()).unwrap_err();
        assert!(matches!(err, GroupError::Infinite(_)));
    }

    #[test]
    fn cosets_match_pattern_sizes() {
        let root = Seed::initial(&fixtures::a2());
        assert_eq!(
            coset_set(&root, EqualityMode::default(), 1000)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            coset_set(&root, EqualityMode::Strict, 1000).unwrap().len(),
            10
        );
        let one = Seed::initial(&fixtures::a1_power(1));
        assert_eq!(
            coset_set(&one, EqualityMode::default(), 1000)
                .unwrap()
                .len(),
            2
        );
        let w4 = Seed::initial(&fixtures::w4());
        assert!(matches!(
            coset_set(&w4, EqualityMode::default(), 1000),
            Err(GroupError::Infinite(_))
        ));
    }

    #[test]
    fn rebase_keeps_order() {
        let root = Seed::initial(&fixtures::a2());
        let g = compute_rooted_group(&root, EqualityMode::default(), GroupCaps::default()).unwrap();
        let same = rebase_group(&g, &w("")).unwrap();
        assert_eq!(same.group.order(), 2);
        assert_eq!(same.image, vec![0, 1]);
        let moved = rebase_group(&g, &w("1")).unwrap();
        assert_eq!(moved.group.order(), 2);
        assert!(moved.is_injective());
    }
}
