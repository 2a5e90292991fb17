//! Valued quivers, skew-symmetrizable exchange matrices and their mutation.
//!
//! Vertices are 0-based in the library API. Text formats (quiver files, DOT,
//! `Display` impls, error messages) use 1-based labels.

mod class;
mod error;
mod file;
mod matrix;
mod permutation;
mod symmetry;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use class::{
    canonical_key, enumerate_quiver_class, CanonicalKey, QuiverClass, CANONICAL_KEY_MAX_RANK,
};
pub use error::QuiverError;
pub use file::{EdgeRecord, QuiverFile};
pub use matrix::ExchangeMatrix;
pub use permutation::Permutation;
pub use symmetry::{find_realizing_sequence, find_symmetry, Sign, Symmetry};

/// The valuation `(d_ij, d_ji)` carried by an arrow `i -> j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Valuation {
    pub forward: u64,
    pub backward: u64,
}

impl Valuation {
    pub const SIMPLE: Valuation = Valuation {
        forward: 1,
        backward: 1,
    };

    pub fn new(forward: u64, backward: u64) -> Self {
        Self { forward, backward }
    }

    /// Valuation of the same edge read in the opposite direction.
    pub fn swapped(self) -> Self {
        Self {
            forward: self.backward,
            backward: self.forward,
        }
    }

    pub fn weight(self) -> u64 {
        self.forward * self.backward
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.forward, self.backward)
    }
}

/// An oriented valued quiver with symmetrizer and an optional frozen set.
///
/// Invariants (checked by every constructor): no loops, at most one arrow per
/// unordered pair, positive valuations and symmetrizer entries, and
/// `d_i * d_ij == d_ji * d_j` on every arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "QuiverFile", into = "QuiverFile")]
pub struct ValuedQuiver {
    n: usize,
    edges: BTreeMap<(usize, usize), Valuation>,
    symmetrizer: Vec<u64>,
    frozen: BTreeSet<usize>,
}

impl ValuedQuiver {
    /// Builds and validates a quiver. When `symmetrizer` is `None` the minimal
    /// positive symmetrizer is inferred per connected component.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, Valuation)>,
        symmetrizer: Option<Vec<u64>>,
        frozen: impl IntoIterator<Item = usize>,
    ) -> Result<Self, QuiverError> {
        let mut map = BTreeMap::new();
        for (i, j, v) in edges {
            for x in [i, j] {
                if x >= n {
                    return Err(QuiverError::VertexOutOfRange { vertex: x, n });
                }
            }
            if i == j {
                return Err(QuiverError::LoopEdge(i));
            }
            if v.forward == 0 || v.backward == 0 {
                return Err(QuiverError::NonPositiveValuation(i, j));
            }
            if map.contains_key(&(i, j)) {
                return Err(QuiverError::DuplicateEdge(i, j));
            }
            if map.contains_key(&(j, i)) {
                return Err(QuiverError::TwoCycle(i, j));
            }
            map.insert((i, j), v);
        }
        let mut frozen_set = BTreeSet::new();
        for f in frozen {
            if f >= n {
                return Err(QuiverError::VertexOutOfRange { vertex: f, n });
            }
            frozen_set.insert(f);
        }
        let symmetrizer = match symmetrizer {
            Some(d) => d,
            None => infer_symmetrizer(n, &map)?,
        };
        let q = Self {
            n,
            edges: map,
            symmetrizer,
            frozen: frozen_set,
        };
        q.check_symmetrizer()?;
        Ok(q)
    }

    /// Convenience constructor from `(from, to, d_ij, d_ji)` tuples with an
    /// inferred symmetrizer and nothing frozen.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, u64, u64)]) -> Result<Self, QuiverError> {
        Self::new(
            n,
            arrows
                .iter()
                .map(|&(i, j, a, b)| (i, j, Valuation::new(a, b))),
            None,
            [],
        )
    }

    fn check_symmetrizer(&self) -> Result<(), QuiverError> {
        if self.symmetrizer.len() != self.n {
            return Err(QuiverError::SymmetrizerLength {
                expected: self.n,
                found: self.symmetrizer.len(),
            });
        }
        if let Some(i) = self.symmetrizer.iter().position(|&d| d == 0) {
            return Err(QuiverError::NonPositiveSymmetrizer(i));
        }
        for (&(i, j), v) in &self.edges {
            let lhs = self.symmetrizer[i] as u128 * v.forward as u128;
            let rhs = v.backward as u128 * self.symmetrizer[j] as u128;
            if lhs != rhs {
                return Err(QuiverError::SymmetrizerMismatch(i, j));
            }
        }
        Ok(())
    }

    /// Number of vertices, frozen ones included.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `rk(Q)`: the number of mutable vertices.
    pub fn rank(&self) -> usize {
        self.n - self.frozen.len()
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.symmetrizer
    }

    pub fn frozen(&self) -> &BTreeSet<usize> {
        &self.frozen
    }

    pub fn is_frozen(&self, k: usize) -> bool {
        self.frozen.contains(&k)
    }

    pub fn mutable_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |k| !self.frozen.contains(k))
    }

    /// Arrows `(i, j, valuation)` in lexicographic order of `(i, j)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Valuation)> + '_ {
        self.edges.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Valuation of the arrow `i -> j`, if present.
    pub fn arrow(&self, i: usize, j: usize) -> Option<Valuation> {
        self.edges.get(&(i, j)).copied()
    }

    /// Entry `b_ij` of the associated exchange matrix.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        if let Some(v) = self.edges.get(&(i, j)) {
            v.forward as i64
        } else if let Some(v) = self.edges.get(&(j, i)) {
            -(v.backward as i64)
        } else {
            0
        }
    }

    /// `w_ij`: the weight of the edge between `i` and `j`, 0 when absent.
    pub fn edge_weight(&self, i: usize, j: usize) -> u64 {
        self.arrow(i, j)
            .or_else(|| self.arrow(j, i))
            .map_or(0, Valuation::weight)
    }

    /// `w(Q)`: the maximum edge weight, 0 for an edgeless quiver.
    pub fn weight(&self) -> u64 {
        self.edges.values().map(|v| v.weight()).max().unwrap_or(0)
    }

    /// Maximum weight over edges joining two mutable vertices.
    pub fn mutable_weight(&self) -> u64 {
        self.edges
            .iter()
            .filter(|(&(i, j), _)| !self.is_frozen(i) && !self.is_frozen(j))
            .map(|(_, v)| v.weight())
            .max()
            .unwrap_or(0)
    }

    /// Vertices joined to `i` by an edge of nonzero weight.
    pub fn neighborhood(&self, i: usize) -> BTreeSet<usize> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_leaf(&self, i: usize) -> bool {
        self.neighborhood(i).len() == 1
    }

    pub fn is_simply_laced(&self) -> bool {
        self.weight() <= 1
    }

    /// Same valued arrows and frozen set; the symmetrizer is ignored because
    /// the arrows determine it up to scaling on each component.
    pub fn same_shape(&self, other: &ValuedQuiver) -> bool {
        self.n == other.n && self.edges == other.edges && self.frozen == other.frozen
    }

    /// Row-major entries of `B(Q)`.
    pub fn matrix_entries(&self) -> Vec<i64> {
        let mut b = vec![0i64; self.n * self.n];
        for (&(i, j), v) in &self.edges {
            b[i * self.n + j] = v.forward as i64;
            b[j * self.n + i] = -(v.backward as i64);
        }
        b
    }

    pub fn to_matrix(&self) -> ExchangeMatrix {
        ExchangeMatrix::from_parts(self.n, self.matrix_entries(), self.symmetrizer.clone())
    }

    /// Inverse of [`ValuedQuiver::to_matrix`]; the frozen set is empty.
    pub fn from_matrix(b: &ExchangeMatrix) -> Result<Self, QuiverError> {
        b.validate()?;
        let n = b.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let bij = b.get(i, j);
                if bij > 0 {
                    let bji = b.get(j, i);
                    edges.push((i, j, Valuation::new(bij as u64, (-bji) as u64)));
                }
            }
        }
        Self::new(n, edges, Some(b.symmetrizer().to_vec()), [])
    }

    /// Reverses every arrow, so `B(opposite) = -B(Q)`.
    pub fn opposite(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|(&(i, j), &v)| ((j, i), v.swapped()))
            .collect();
        Self {
            n: self.n,
            edges,
            symmetrizer: self.symmetrizer.clone(),
            frozen: self.frozen.clone(),
        }
    }

    /// `sigma(Q)`: relabels vertex `i` as `sigma(i)`, carrying valuations,
    /// symmetrizer entries and frozen marks along.
    pub fn permuted(&self, sigma: &Permutation) -> Result<Self, QuiverError> {
        if sigma.len() != self.n {
            return Err(QuiverError::SizeMismatch {
                expected: self.n,
                found: sigma.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|(&(i, j), &v)| ((sigma.apply(i), sigma.apply(j)), v))
            .collect();
        let mut symmetrizer = vec![0; self.n];
        for (i, &d) in self.symmetrizer.iter().enumerate() {
            symmetrizer[sigma.apply(i)] = d;
        }
        let frozen = self.frozen.iter().map(|&f| sigma.apply(f)).collect();
        Ok(Self {
            n: self.n,
            edges,
            symmetrizer,
            frozen,
        })
    }

    /// `Q_I`: freezes every vertex outside `mutable`.
    pub fn freeze(&self, mutable: &BTreeSet<usize>) -> Result<Self, QuiverError> {
        if let Some(&v) = mutable.iter().find(|&&v| v >= self.n) {
            return Err(QuiverError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let frozen = (0..self.n).filter(|v| !mutable.contains(v)).collect();
        Ok(Self {
            frozen,
            ..self.clone()
        })
    }

    /// Full subquiver on `vertices`, relabeled `0..vertices.len()` in
    /// increasing order of the original labels.
    pub fn induced(&self, vertices: &BTreeSet<usize>) -> Self {
        let index: BTreeMap<usize, usize> = vertices
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(&(i, j), &v)| Some(((*index.get(&i)?, *index.get(&j)?), v)))
            .collect();
        let symmetrizer = vertices.iter().map(|&v| self.symmetrizer[v]).collect();
        let frozen = self
            .frozen
            .iter()
            .filter_map(|f| index.get(f).copied())
            .collect();
        Self {
            n: vertices.len(),
            edges,
            symmetrizer,
            frozen,
        }
    }

    /// The subquiver on the mutable vertices.
    pub fn mutable_part(&self) -> Self {
        self.induced(&self.mutable_vertices().collect())
    }

    fn check_vertex(&self, k: usize) -> Result<(), QuiverError> {
        if k >= self.n {
            return Err(QuiverError::VertexOutOfRange {
                vertex: k,
                n: self.n,
            });
        }
        if self.frozen.contains(&k) {
            return Err(QuiverError::FrozenVertex(k));
        }
        Ok(())
    }

    /// Mutation at `k` by the direct arrow rules:
    ///
    /// * arrows at `k` are reversed with their valuation components swapped;
    /// * each path `i -> k -> j` contributes `(v_ik v_kj, v_ki v_jk)` to the
    ///   arrow `i -> j`, cancelling against an existing `j -> i`;
    /// * the symmetrizer is unchanged.
    pub fn mutate(&self, k: usize) -> Result<Self, QuiverError> {
        self.check_vertex(k)?;
        let mut edges = BTreeMap::new();
        let mut incoming = Vec::new();
        let mut outgoing = Vec::new();
        for (&(i, j), &v) in &self.edges {
            if j == k {
                incoming.push((i, v));
                edges.insert((k, i), v.swapped());
            } else if i == k {
                outgoing.push((j, v));
                edges.insert((j, k), v.swapped());
            } else {
                edges.insert((i, j), v);
            }
        }
        for &(i, vik) in &incoming {
            for &(j, vkj) in &outgoing {
                // vik = (v_ik, v_ki), vkj = (v_kj, v_jk)
                let fwd = vik
                    .forward
                    .checked_mul(vkj.forward)
                    .ok_or(QuiverError::Overflow)?;
                let back = vik
                    .backward
                    .checked_mul(vkj.backward)
                    .ok_or(QuiverError::Overflow)?;
                if let Some(v) = edges.remove(&(i, j)) {
                    let merged = Valuation::new(
                        v.forward.checked_add(fwd).ok_or(QuiverError::Overflow)?,
                        v.backward.checked_add(back).ok_or(QuiverError::Overflow)?,
                    );
                    edges.insert((i, j), merged);
                } else if let Some(v) = edges.remove(&(j, i)) {
                    // oriented triangle i -> k -> j -> i; v = (v_ji, v_ij)
                    let (v_ji, v_ij) = (v.forward, v.backward);
                    match fwd.cmp(&v_ij) {
                        std::cmp::Ordering::Less => {
                            edges.insert((j, i), Valuation::new(v_ji - back, v_ij - fwd));
                        }
                        std::cmp::Ordering::Greater => {
                            edges.insert((i, j), Valuation::new(fwd - v_ij, back.abs_diff(v_ji)));
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                } else {
                    edges.insert((i, j), Valuation::new(fwd, back));
                }
            }
        }
        Ok(Self {
            n: self.n,
            edges,
            symmetrizer: self.symmetrizer.clone(),
            frozen: self.frozen.clone(),
        })
    }

    /// Mutation through the exchange matrix: `mu_k(B(Q))` converted back.
    pub fn mutate_via_matrix(&self, k: usize) -> Result<Self, QuiverError> {
        self.check_vertex(k)?;
        let b = self.to_matrix().mutate(k)?;
        let q = Self::from_matrix(&b)?;
        Ok(Self {
            frozen: self.frozen.clone(),
            ..q
        })
    }
}

/// One arrow per line as `i -> j (d_ij,d_ji)`, plus symmetrizer and frozen set.
impl fmt::Display for ValuedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .edges
            .iter()
            .map(|(&(i, j), v)| format!("{}->{} {}", i + 1, j + 1, v))
            .collect();
        write!(f, "[{}]", arrows.join(", "))?;
        if !self.frozen.is_empty() {
            let fr: Vec<String> = self.frozen.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, " frozen {{{}}}", fr.join(","))?;
        }
        Ok(())
    }
}

/// Minimal positive solution of `d_i * d_ij = d_ji * d_j` on each connected
/// component.
pub(crate) fn infer_symmetrizer(
    n: usize,
    edges: &BTreeMap<(usize, usize), Valuation>,
) -> Result<Vec<u64>, QuiverError> {
    // ratio[v] = num/den relative to the component root
    let mut adjacency: Vec<Vec<(usize, u64, u64)>> = vec![Vec::new(); n];
    for (&(i, j), v) in edges {
        // d_j = d_i * d_ij / d_ji
        adjacency[i].push((j, v.forward, v.backward));
        adjacency[j].push((i, v.backward, v.forward));
    }
    let mut ratio: Vec<Option<(u128, u128)>> = vec![None; n];
    let mut out = vec![0u64; n];
    for start in 0..n {
        if ratio[start].is_some() {
            continue;
        }
        ratio[start] = Some((1, 1));
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let (un, ud) = ratio[u].expect("visited");
            for &(w, mul, div) in &adjacency[u] {
                let (mut wn, mut wd) = (un * mul as u128, ud * div as u128);
                let g = wn.gcd(&wd);
                wn /= g;
                wd /= g;
                match ratio[w] {
                    None => {
                        ratio[w] = Some((wn, wd));
                        component.push(w);
                        queue.push_back(w);
                    }
                    Some(existing) if existing != (wn, wd) => {
                        return Err(QuiverError::InconsistentSymmetrizer(w));
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1u128, |acc, &v| acc.lcm(&ratio[v].expect("visited").1));
        let scaled: Vec<u128> = component
            .iter()
            .map(|&v| {
                let (a, b) = ratio[v].expect("visited");
                a * (lcm / b)
            })
            .collect();
        let g = scaled.iter().fold(0u128, |acc, &x| acc.gcd(&x));
        for (&v, &s) in component.iter().zip(&scaled) {
            out[v] = u64::try_from(s / g).map_err(|_| QuiverError::Overflow)?;
        }
    }
    Ok(out)
}
