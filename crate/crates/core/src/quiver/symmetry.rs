use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Permutation, ValuedQuiver};
use crate::word::MutationWord;

/// Global orientation of a symmetry: `Minus` matches the opposite quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `sigma(q1) = q2` (sign `+`) or `sigma(q1) = opposite(q2)` (sign `-`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symmetry {
    pub permutation: Permutation,
    pub sign: Sign,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.permutation)
    }
}

/// Exact search for a relabeling carrying `q1` onto `q2`, or onto its
/// opposite when `allow_sign` is set. The positive orientation is tried first.
pub fn find_symmetry(q1: &ValuedQuiver, q2: &ValuedQuiver, allow_sign: bool) -> Option<Symmetry> {
    if q1.n() != q2.n() || q1.rank() != q2.rank() || q1.edge_count() != q2.edge_count() {
        return None;
    }
    let signs: &[Sign] = if allow_sign {
        &[Sign::Plus, Sign::Minus]
    } else {
        &[Sign::Plus]
    };
    signs.iter().find_map(|&sign| {
        let target = match sign {
            Sign::Plus => q2.clone(),
            Sign::Minus => q2.opposite(),
        };
        search(q1, &target).map(|permutation| Symmetry { permutation, sign })
    })
}

type Signature = (bool, Vec<i64>);

fn signatures(q: &ValuedQuiver, b: &[i64]) -> Vec<Signature> {
    let n = q.n();
    (0..n)
        .map(|v| {
            let mut row: Vec<i64> = b[v * n..(v + 1) * n]
                .iter()
                .copied()
                .filter(|&x| x != 0)
                .collect();
            row.sort_unstable();
            (q.is_frozen(v), row)
        })
        .collect()
}

fn search(q1: &ValuedQuiver, q2: &ValuedQuiver) -> Option<Permutation> {
    let n = q1.n();
    let (b1, b2) = (q1.matrix_entries(), q2.matrix_entries());
    let (s1, s2) = (signatures(q1, &b1), signatures(q2, &b2));
    let mut a = s1.clone();
    let mut c = s2.clone();
    a.sort();
    c.sort();
    if a != c {
        return None;
    }
    // most constrained vertices first: rarest signature, then highest degree
    let mut order: Vec<usize> = (0..n).collect();
    let count = |s: &Signature| s1.iter().filter(|t| *t == s).count();
    order.sort_by_key(|&v| (count(&s1[v]), std::cmp::Reverse(s1[v].1.len()), v));
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        depth: usize,
        order: &[usize],
        n: usize,
        b1: &[i64],
        b2: &[i64],
        s1: &[Signature],
        s2: &[Signature],
        images: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for t in 0..n {
            if used[t] || s1[v] != s2[t] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let tu = images[u];
                b1[v * n + u] == b2[t * n + tu] && b1[u * n + v] == b2[tu * n + t]
            });
            if !consistent {
                continue;
            }
            images[v] = t;
            used[t] = true;
            if extend(depth + 1, order, n, b1, b2, s1, s2, images, used) {
                return true;
            }
            used[t] = false;
            images[v] = usize::MAX;
        }
        false
    }
    if extend(0, &order, n, &b1, &b2, &s1, &s2, &mut images, &mut used) {
        Some(Permutation::from_images(images).expect("search assigns a bijection"))
    } else {
        None
    }
}

/// Breadth-first search over the mutation class of `q` for a shortest word
/// `mu` with `mu(q) = sigma(q)` (same arrows, valuations and frozen set).
/// Only words of length at most `max_depth` are tried.
pub fn find_realizing_sequence(
    q: &ValuedQuiver,
    sigma: &Permutation,
    max_depth: usize,
) -> Option<MutationWord> {
    let target = q.permuted(sigma).ok()?;
    if q.same_shape(&target) {
        return Some(MutationWord::empty());
    }
    let mutable: Vec<usize> = q.mutable_vertices().collect();
    let mut parent: HashMap<ValuedQuiver, Option<(ValuedQuiver, usize)>> =
        HashMap::from([(q.clone(), None)]);
    let mut queue = VecDeque::from([(q.clone(), 0usize)]);
    while let Some((at, depth)) = queue.pop_front() {
        if depth == max_depth {
            continue;
        }
        for &k in &mutable {
            let Ok(next) = at.mutate(k) else { continue };
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((at.clone(), k)));
            if next.same_shape(&target) {
                let mut steps = Vec::new();
                let mut cur = next;
                while let Some(Some((prev, k))) = parent.get(&cur) {
                    steps.push(*k);
                    cur = prev.clone();
                }
                steps.reverse();
                return Some(MutationWord::new(steps));
            }
            queue.push_back((next, depth + 1));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rank_two_symmetries() {
        let a2 = fixtures::a2();
        let flipped = ValuedQuiver::from_arrows(2, &[(1, 0, 1, 1)]).unwrap();
        let s = find_symmetry(&a2, &flipped, false).unwrap();
        assert_eq!(s.permutation, Permutation::transposition(2, 0, 1));
        assert_eq!(s.sign, Sign::Plus);
        let id = find_symmetry(&a2, &a2, true).unwrap();
        assert!(id.permutation.is_identity());
        assert_eq!(id.sign, Sign::Plus);
        assert_eq!(find_symmetry(&a2, &fixtures::b2(), true), None);
    }

    #[test]
    fn sign_matches_opposite() {
        // B2 1->2 (1,2) against 1->2 (2,1): the opposite of the latter is
        // 2->1 (1,2), the relabeled B2.
        let b2 = fixtures::b2();
        let c2 = ValuedQuiver::from_arrows(2, &[(0, 1, 2, 1)]).unwrap();
        assert_eq!(find_symmetry(&b2, &c2, false), None);
        let s = find_symmetry(&b2, &c2, true).unwrap();
        assert_eq!(s.sign, Sign::Minus);
        assert!(b2
            .permuted(&s.permutation)
            .unwrap()
            .same_shape(&c2.opposite()));
    }

    #[test]
    fn example_quiver_relabeled() {
        let q = fixtures::rank7();
        let sigma = Permutation::from_images(vec![3, 0, 6, 1, 5, 2, 4]).unwrap();
        let r = q.permuted(&sigma).unwrap();
        let s = find_symmetry(&q, &r, false).unwrap();
        assert!(q.permuted(&s.permutation).unwrap().same_shape(&r));
        let back = find_symmetry(&r, &q, false).unwrap();
        assert!(r.permuted(&back.permutation).unwrap().same_shape(&q));
    }

    #[test]
    fn realizing_sequences() {
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(
            find_realizing_sequence(&fixtures::a2(), &swap, 4),
            Some(MutationWord::from_labels(&[1]))
        );
        let disconnected = ValuedQuiver::new(2, [], None, []).unwrap();
        assert_eq!(
            find_realizing_sequence(&disconnected, &swap, 4),
            Some(MutationWord::empty())
        );
        assert_eq!(find_realizing_sequence(&fixtures::b2(), &swap, 10), None);
    }
}
