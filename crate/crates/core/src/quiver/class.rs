use std::collections::{HashMap, VecDeque};

use super::ValuedQuiver;

/// Largest number of vertices for which [`canonical_key`] is computed; the
/// search visits all `n!` relabelings.
pub const CANONICAL_KEY_MAX_RANK: usize = 8;

/// Lexicographically minimal `(frozen flags, matrix)` over all relabelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    frozen: Vec<bool>,
    matrix: Vec<i64>,
}

/// Label-independent key, or `None` above [`CANONICAL_KEY_MAX_RANK`].
pub fn canonical_key(q: &ValuedQuiver) -> Option<CanonicalKey> {
    let n = q.n();
    if n > CANONICAL_KEY_MAX_RANK {
        return None;
    }
    let b = q.matrix_entries();
    let frozen: Vec<bool> = (0..n).map(|v| q.is_frozen(v)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<CanonicalKey> = None;
    let mut consider = |order: &[usize]| {
        let key = CanonicalKey {
            frozen: order.iter().map(|&v| frozen[v]).collect(),
            matrix: order
                .iter()
                .flat_map(|&a| order.iter().map(move |&c| (a, c)))
                .map(|(a, c)| b[a * n + c])
                .collect(),
        };
        if best.as_ref().map_or(true, |cur| key < *cur) {
            best = Some(key);
        }
    };
    // Heap's algorithm
    let mut c = vec![0usize; n];
    consider(&order);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            consider(&order);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// The labeled mutation class `[Q]` reached by breadth-first search.
#[derive(Debug, Clone)]
pub struct QuiverClass {
    members: Vec<ValuedQuiver>,
    index: HashMap<ValuedQuiver, usize>,
    /// `(from, vertex, to)` for every mutation between recorded members.
    edges: Vec<(usize, usize, usize)>,
    truncated: bool,
}

impl QuiverClass {
    /// Members in discovery order; the root is first.
    pub fn members(&self) -> &[ValuedQuiver] {
        &self.members
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn contains(&self, q: &ValuedQuiver) -> bool {
        self.index.contains_key(q)
    }

    pub fn index_of(&self, q: &ValuedQuiver) -> Option<usize> {
        self.index.get(q).copied()
    }

    /// `w[Q]`: maximum member weight.
    pub fn weight(&self) -> u64 {
        self.members
            .iter()
            .map(ValuedQuiver::weight)
            .max()
            .unwrap_or(0)
    }

    /// Maximum weight over edges between mutable vertices of any member.
    pub fn mutable_weight(&self) -> u64 {
        self.members
            .iter()
            .map(ValuedQuiver::mutable_weight)
            .max()
            .unwrap_or(0)
    }

    /// Number of members up to relabeling, when every member is small enough
    /// for a canonical key.
    pub fn unlabeled_size(&self) -> Option<usize> {
        let keys: Option<std::collections::HashSet<CanonicalKey>> =
            self.members.iter().map(canonical_key).collect();
        keys.map(|k| k.len())
    }
}

/// Breadth-first closure of `q` under mutation at non-frozen vertices, capped
/// at `cap` members. Mutations that overflow the valuation range are treated
/// as a hit cap.
pub fn enumerate_quiver_class(q: &ValuedQuiver, cap: usize) -> QuiverClass {
    let mut class = QuiverClass {
        members: vec![q.clone()],
        index: HashMap::from([(q.clone(), 0)]),
        edges: Vec::new(),
        truncated: false,
    };
    let mutable: Vec<usize> = q.mutable_vertices().collect();
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for &k in &mutable {
            let Ok(next) = class.members[at].mutate(k) else {
                class.truncated = true;
                continue;
            };
            let to = match class.index.get(&next) {
                Some(&to) => to,
                None => {
                    if class.members.len() >= cap {
                        class.truncated = true;
                        continue;
                    }
                    let to = class.members.len();
                    class.index.insert(next.clone(), to);
                    class.members.push(next);
                    queue.push_back(to);
                    to
                }
            };
            class.edges.push((at, k, to));
        }
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a2_class_has_both_orientations() {
        let c = enumerate_quiver_class(&fixtures::a2(), 100);
        assert_eq!(c.len(), 2);
        assert_eq!(c.weight(), 1);
        assert!(!c.is_truncated());
        assert_eq!(c.unlabeled_size(), Some(1));
    }

    #[test]
    fn weight_four_rank_two_class() {
        let c = enumerate_quiver_class(&fixtures::w4(), 100);
        assert_eq!(c.len(), 2);
        assert_eq!(c.weight(), 4);
    }

    #[test]
    fn a3_class_regression() {
        // regression values from the closure: 12 labeled paths plus the two
        // oriented triangles; up to relabeling 3 path shapes and the triangle
        let c = enumerate_quiver_class(&fixtures::a3(), 1000);
        assert!(!c.is_truncated());
        assert_eq!(c.weight(), 1);
        assert_eq!(c.len(), A3_LABELED_CLASS_SIZE);
        assert_eq!(c.unlabeled_size(), Some(A3_UNLABELED_CLASS_SIZE));
    }

    const A3_LABELED_CLASS_SIZE: usize = 14;
    const A3_UNLABELED_CLASS_SIZE: usize = 4;

    #[test]
    fn truncation_is_flagged() {
        let markov_like = fixtures::cycle3_weighted(3);
        let c = enumerate_quiver_class(&markov_like, 20);
        assert!(c.is_truncated());
        assert_eq!(c.len(), 20);
    }

    #[test]
    fn canonical_key_ignores_labels() {
        let q = fixtures::rank7();
        let sigma = crate::quiver::Permutation::from_images(vec![3, 0, 6, 1, 5, 2, 4]).unwrap();
        assert_eq!(
            canonical_key(&q),
            canonical_key(&q.permuted(&sigma).unwrap())
        );
        assert_ne!(canonical_key(&q), canonical_key(&q.opposite()));
    }
}
