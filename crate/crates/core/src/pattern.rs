//! Cluster patterns (rooted cluster digraphs) and the finite-type decision.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::quiver::{enumerate_quiver_class, Permutation, Sign, Symmetry, ValuedQuiver};
use crate::seed::{EqualityMode, Seed, SeedError};

/// Default node cap for pattern enumeration.
pub const DEFAULT_PATTERN_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct NodeKey {
    vars: Vec<u32>,
    frozen: Vec<bool>,
    matrix: Vec<i64>,
}

/// The seeds reachable from a root, identified according to an
/// [`EqualityMode`], with one edge per (node, mutable direction).
///
/// Nodes store the first seed found in their class. In symmetric modes the
/// direction labels of an edge refer to the vertex labels of its source
/// representative.
#[derive(Debug, Clone)]
pub struct ClusterPattern {
    mode: EqualityMode,
    nodes: Vec<Seed>,
    node_vars: Vec<Vec<u32>>,
    next: Vec<Vec<Option<usize>>>,
    produced: Vec<Vec<Option<u32>>>,
    variables: Vec<LaurentPoly>,
    var_index: HashMap<LaurentPoly, u32>,
    index: HashMap<NodeKey, usize>,
    directions: Vec<usize>,
    truncated: bool,
    frontier: usize,
}

impl ClusterPattern {
    pub fn mode(&self) -> EqualityMode {
        self.mode
    }

    pub fn root(&self) -> &Seed {
        &self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Seed] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &Seed {
        &self.nodes[id]
    }

    /// Mutable directions, in increasing order.
    pub fn directions(&self) -> &[usize] {
        &self.directions
    }

    /// Target of the edge leaving `node` in direction `k`.
    pub fn next(&self, node: usize, k: usize) -> Option<usize> {
        self.next[node][k]
    }

    /// Variable id produced by the edge leaving `node` in direction `k`.
    pub fn produced(&self, node: usize, k: usize) -> Option<u32> {
        self.produced[node][k]
    }

    /// `(from, direction, to)` for every recorded edge, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (from, row) in self.next.iter().enumerate() {
            for (k, to) in row.iter().enumerate() {
                if let Some(to) = to {
                    out.push((from, k, *to));
                }
            }
        }
        out
    }

    /// `X`: every cluster variable, in discovery order (the initial variables
    /// first).
    pub fn variables(&self) -> &[LaurentPoly] {
        &self.variables
    }

    pub fn variable(&self, id: u32) -> &LaurentPoly {
        &self.variables[id as usize]
    }

    pub fn variable_id(&self, x: &LaurentPoly) -> Option<u32> {
        self.var_index.get(x).copied()
    }

    /// Variable ids of a node's cluster, by position.
    pub fn node_variables(&self, node: usize) -> &[u32] {
        &self.node_vars[node]
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Number of nodes left unexpanded when the cap was hit.
    pub fn frontier_size(&self) -> usize {
        self.frontier
    }

    /// Every node has one outgoing edge per mutable direction.
    pub fn is_regular(&self) -> bool {
        self.next
            .iter()
            .all(|row| self.directions.iter().all(|&k| row[k].is_some()))
    }

    /// Node of `s` under the pattern's mode, with the witness carrying the
    /// node's representative onto `s`.
    pub fn locate(&self, s: &Seed) -> Option<(usize, Symmetry)> {
        let ids: Vec<u32> = s
            .cluster
            .iter()
            .map(|x| self.variable_id(x))
            .collect::<Option<_>>()?;
        let node = *self.index.get(&node_key(&ids, &s.quiver, self.mode))?;
        let witness = crate::seed::seeds_equal(&self.nodes[node], s, self.mode)?;
        Some((node, witness))
    }

    fn intern(&mut self, x: &LaurentPoly) -> u32 {
        if let Some(&id) = self.var_index.get(x) {
            return id;
        }
        let id = self.variables.len() as u32;
        self.variables.push(x.clone());
        self.var_index.insert(x.clone(), id);
        id
    }
}

fn node_key(ids: &[u32], q: &ValuedQuiver, mode: EqualityMode) -> NodeKey {
    let n = ids.len();
    let b = q.matrix_entries();
    let mut order: Vec<usize> = (0..n).collect();
    if mode != EqualityMode::Strict {
        order.sort_by_key(|&i| ids[i]);
    }
    let b = &b;
    let mut matrix: Vec<i64> = order
        .iter()
        .flat_map(|&a| order.iter().map(move |&c| b[a * n + c]))
        .collect();
    if mode == (EqualityMode::Symmetric { allow_sign: true }) {
        let neg: Vec<i64> = matrix.iter().map(|x| -x).collect();
        if neg < matrix {
            matrix = neg;
        }
    }
    NodeKey {
        vars: order.iter().map(|&i| ids[i]).collect(),
        frozen: order.iter().map(|&i| q.is_frozen(i)).collect(),
        matrix,
    }
}

/// Breadth-first closure of `root` under seed mutation, identifying seeds by
/// `mode`, stopping at `cap` nodes.
pub fn enumerate_cluster_pattern(
    root: &Seed,
    mode: EqualityMode,
    cap: usize,
) -> Result<ClusterPattern, SeedError> {
    let n = root.n();
    let mut p = ClusterPattern {
        mode,
        nodes: Vec::new(),
        node_vars: Vec::new(),
        next: Vec::new(),
        produced: Vec::new(),
        variables: Vec::new(),
        var_index: HashMap::new(),
        index: HashMap::new(),
        directions: root.quiver.mutable_vertices().collect(),
        truncated: false,
        frontier: 0,
    };
    let ids: Vec<u32> = root.cluster.iter().map(|x| p.intern(x)).collect();
    p.index.insert(node_key(&ids, &root.quiver, mode), 0);
    p.nodes.push(root.clone());
    p.node_vars.push(ids);
    p.next.push(vec![None; n]);
    p.produced.push(vec![None; n]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for &k in &p.directions.clone() {
            let seed = p.nodes[at].mutate(k)?;
            let mut ids = p.node_vars[at].clone();
            ids[k] = p.intern(&seed.cluster[k]);
            let key = node_key(&ids, &seed.quiver, mode);
            let to = match p.index.get(&key) {
                Some(&to) => to,
                None => {
                    if p.nodes.len() >= cap {
                        p.truncated = true;
                        continue;
                    }
                    let to = p.nodes.len();
                    p.index.insert(key, to);
                    p.nodes.push(seed);
                    p.node_vars.push(ids.clone());
                    p.next.push(vec![None; n]);
                    p.produced.push(vec![None; n]);
                    queue.push_back(to);
                    to
                }
            };
            p.next[at][k] = Some(to);
            p.produced[at][k] = Some(ids[k]);
        }
        if p.truncated {
            p.frontier = queue.len() + 1;
            break;
        }
    }
    Ok(p)
}

/// Why a seed is of infinite type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfiniteReason {
    /// A quiver in the mutation class has an edge of weight at least 4
    /// between mutable vertices. Finite type requires every such weight to be
    /// at most 3 (the Cartan–Killing classification of finite type).
    WeightObstruction {
        member: ValuedQuiver,
        from: usize,
        to: usize,
        weight: u64,
    },
}

impl std::fmt::Display for InfiniteReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InfiniteReason::WeightObstruction {
                member,
                from,
                to,
                weight,
            } => {
                write!(
                    f,
                    "edge {}-{} of weight {weight} in {member}",
                    from + 1,
                    to + 1
                )
            }
        }
    }
}

/// Outcome of [`is_finite_type`].
#[derive(Debug, Clone)]
pub enum FiniteTypeVerdict {
    Finite(Box<ClusterPattern>),
    Infinite(InfiniteReason),
    /// Neither the weight test nor the closure concluded within the cap.
    Unknown {
        explored: usize,
        frontier: usize,
    },
}

impl FiniteTypeVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, FiniteTypeVerdict::Finite(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            FiniteTypeVerdict::Finite(_) => "finite",
            FiniteTypeVerdict::Infinite(_) => "infinite",
            FiniteTypeVerdict::Unknown { .. } => "unknown",
        }
    }

    pub fn pattern(&self) -> Option<&ClusterPattern> {
        match self {
            FiniteTypeVerdict::Finite(p) => Some(p),
            _ => None,
        }
    }
}

/// First member of the quiver mutation class (in breadth-first order) with
/// a mutable edge of weight at least 4.
pub fn weight_obstruction(q: &ValuedQuiver, cap: usize) -> Option<InfiniteReason> {
    let class = enumerate_quiver_class(q, cap);
    class.members().iter().find_map(|m| {
        m.edges()
            .filter(|&(i, j, _)| !m.is_frozen(i) && !m.is_frozen(j))
            .find(|(_, _, v)| v.weight() >= 4)
            .map(|(i, j, v)| InfiniteReason::WeightObstruction {
                member: m.clone(),
                from: i,
                to: j,
                weight: v.weight(),
            })
    })
}

/// Finite-type decision in the default (symmetric, signed) mode.
pub fn is_finite_type(s: &Seed, cap: usize) -> Result<FiniteTypeVerdict, SeedError> {
    is_finite_type_in(s, EqualityMode::default(), cap)
}

/// Weight test over the quiver class first, then pattern closure in `mode`.
pub fn is_finite_type_in(
    s: &Seed,
    mode: EqualityMode,
    cap: usize,
) -> Result<FiniteTypeVerdict, SeedError> {
    if let Some(reason) = weight_obstruction(&s.quiver, cap) {
        return Ok(FiniteTypeVerdict::Infinite(reason));
    }
    let p = enumerate_cluster_pattern(s, mode, cap)?;
    if p.is_truncated() {
        Ok(FiniteTypeVerdict::Unknown {
            explored: p.len(),
            frontier: p.frontier_size(),
        })
    } else {
        Ok(FiniteTypeVerdict::Finite(Box::new(p)))
    }
}

/// The symmetry relating two seeds that share a node, composed as
/// `to_witness ∘ from_witness⁻¹`.
pub fn relative_witness(a: &Symmetry, b: &Symmetry) -> Symmetry {
    let permutation: Permutation = b.permutation.compose(&a.permutation.inverse());
    let sign = if a.sign == b.sign {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Symmetry { permutation, sign }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn count(q: &ValuedQuiver, mode: EqualityMode) -> (usize, usize) {
        let p = enumerate_cluster_pattern(&Seed::initial(q), mode, 10_000).unwrap();
        assert!(!p.is_truncated());
        assert!(p.is_regular());
        (p.len(), p.variables().len())
    }

    #[test]
    fn a2_counts() {
        assert_eq!(count(&fixtures::a2(), EqualityMode::default()), (5, 5));
        assert_eq!(count(&fixtures::a2(), EqualityMode::Strict), (10, 5));
        let p = enumerate_cluster_pattern(
            &Seed::initial(&fixtures::a2()),
            EqualityMode::default(),
            100,
        )
        .unwrap();
        let vars: Vec<String> = p.variables().iter().map(ToString::to_string).collect();
        assert_eq!(
            vars,
            vec![
                "x1",
                "x2",
                "(1 + x2)/x1",
                "(1 + x1)/x2",
                "(1 + x1 + x2)/(x1*x2)"
            ]
        );
    }

    #[test]
    fn rank_one() {
        assert_eq!(
            count(&fixtures::a1_power(1), EqualityMode::default()),
            (2, 2)
        );
    }

    #[test]
    fn rank_two_finite_types() {
        assert_eq!(count(&fixtures::b2(), EqualityMode::default()).1, 6);
        assert_eq!(count(&fixtures::g2(), EqualityMode::default()).1, 8);
    }

    #[test]
    fn a3_counts() {
        assert_eq!(count(&fixtures::a3(), EqualityMode::default()), (14, 9));
    }

    #[test]
    fn truncation_reports_frontier() {
        let p =
            enumerate_cluster_pattern(&Seed::initial(&fixtures::a3()), EqualityMode::default(), 5)
                .unwrap();
        assert!(p.is_truncated());
        assert_eq!(p.len(), 5);
        assert!(p.frontier_size() > 0);
    }

    #[test]
    fn finite_type_verdicts() {
        let v = is_finite_type(&Seed::initial(&fixtures::a2()), 1000).unwrap();
        assert_eq!(v.pattern().unwrap().variables().len(), 5);
        match is_finite_type(&Seed::initial(&fixtures::w4()), 1000).unwrap() {
            FiniteTypeVerdict::Infinite(InfiniteReason::WeightObstruction { weight, .. }) => {
                assert_eq!(weight, 4)
            }
            other => panic!("expected infinite, got {}", other.label()),
        }
        let v = is_finite_type(&Seed::initial(&fixtures::a3()), 1000).unwrap();
        let p = v.pattern().unwrap();
        assert_eq!((p.len(), p.variables().len()), (14, 9));
        assert!(matches!(
            is_finite_type(&Seed::initial(&fixtures::a_n(5)), 10).unwrap(),
            FiniteTypeVerdict::Unknown { explored: 10, .. }
        ));
    }

    #[test]
    fn locate_finds_permuted_root() {
        let root = Seed::initial(&fixtures::a2());
        let p = enumerate_cluster_pattern(&root, EqualityMode::default(), 100).unwrap();
        let pent = root.apply(&"1,2,1,2,1".parse().unwrap()).unwrap();
        let (node, w) = p.locate(&pent).unwrap();
        assert_eq!(node, 0);
        assert_eq!(w.permutation, Permutation::transposition(2, 0, 1));
    }
}
