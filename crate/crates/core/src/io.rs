//! Report files and DOT export.
//!
//! Reports hold display strings for cluster variables, 1-based labels for
//! vertices and words, and 0-based ids for pattern nodes and group elements
//! (0 is always the root / identity). Every report round-trips through JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::groups::{ClusterSet, CosetSet, GroupCaps, RootedLoop, RootedMutationGroup};
use crate::pattern::ClusterPattern;
use crate::quiver::{Symmetry, ValuedQuiver};
use crate::seed::{seeds_equal, EqualityMode, PathTrace};
use crate::word::MutationWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedView {
    pub cluster: Vec<String>,
    pub quiver: ValuedQuiver,
}

impl From<&crate::seed::Seed> for SeedView {
    fn from(s: &crate::seed::Seed) -> Self {
        Self {
            cluster: s.display_cluster(),
            quiver: s.quiver.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternNode {
    pub id: usize,
    pub cluster: Vec<String>,
    pub quiver: ValuedQuiver,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternEdge {
    pub from: usize,
    /// 1-based mutation direction, relative to the `from` node's cluster.
    pub vertex: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternReport {
    pub mode: EqualityMode,
    pub nodes: Vec<PatternNode>,
    pub edges: Vec<PatternEdge>,
    pub variables: Vec<String>,
    pub truncated: bool,
}

impl From<&ClusterPattern> for PatternReport {
    fn from(p: &ClusterPattern) -> Self {
        Self {
            mode: p.mode(),
            nodes: p
                .nodes()
                .iter()
                .enumerate()
                .map(|(id, s)| PatternNode {
                    id,
                    cluster: s.display_cluster(),
                    quiver: s.quiver.clone(),
                })
                .collect(),
            edges: p
                .edges()
                .into_iter()
                .map(|(from, k, to)| PatternEdge {
                    from,
                    vertex: k + 1,
                    to,
                })
                .collect(),
            variables: p.variables().iter().map(ToString::to_string).collect(),
            truncated: p.is_truncated(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElementView {
    pub cluster_set: Vec<String>,
    pub word: MutationWord,
    pub witness: Symmetry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub root: SeedView,
    pub mode: EqualityMode,
    pub order: usize,
    pub elements: Vec<GroupElementView>,
    pub cayley: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub converged: bool,
    pub caps: GroupCaps,
    pub loop_classes: usize,
    pub states_explored: usize,
    pub pattern_nodes: usize,
    pub commutative: bool,
    pub group_axioms: bool,
    pub idempotents: Vec<usize>,
}

impl From<&RootedMutationGroup> for GroupReport {
    fn from(g: &RootedMutationGroup) -> Self {
        Self {
            root: g.root().into(),
            mode: g.mode(),
            order: g.order(),
            elements: g
                .elements()
                .iter()
                .map(|e| GroupElementView {
                    cluster_set: e.cluster_set.display(),
                    word: e.word.clone(),
                    witness: e.witness.clone(),
                })
                .collect(),
            cayley: g.cayley().to_vec(),
            inverse: (0..g.order()).map(|a| g.inverse(a)).collect(),
            converged: g.converged(),
            caps: g.caps(),
            loop_classes: g.loop_classes(),
            states_explored: g.states_explored(),
            pattern_nodes: g.pattern_nodes(),
            commutative: g.is_commutative(),
            group_axioms: g.satisfies_group_axioms(),
            idempotents: g.idempotents(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetView {
    pub node: usize,
    pub word: MutationWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetReport {
    pub mode: EqualityMode,
    pub count: usize,
    pub complete: bool,
    pub unreduced: usize,
    pub cosets: Vec<CosetView>,
}

impl CosetReport {
    pub fn new(mode: EqualityMode, c: &CosetSet) -> Self {
        Self {
            mode,
            count: c.len(),
            complete: c.complete,
            unreduced: c.unreduced,
            cosets: c
                .cosets
                .iter()
                .map(|c| CosetView {
                    node: c.node,
                    word: c.word.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopView {
    pub word: MutationWord,
    pub witness: Symmetry,
    pub cluster_set: Vec<String>,
}

impl From<&RootedLoop> for LoopView {
    fn from(l: &RootedLoop) -> Self {
        Self {
            word: l.word.clone(),
            witness: l.witness.clone(),
            cluster_set: l.cluster_set.display(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopsReport {
    pub mode: EqualityMode,
    pub max_len: usize,
    pub loops: Vec<LoopView>,
}

/// Loop status of a walk's final seed against its first seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopStatus {
    pub strict: bool,
    /// Witness in the requested mode, if the final seed matches the root.
    pub witness: Option<Symmetry>,
}

impl LoopStatus {
    pub fn of(trace: &PathTrace, mode: EqualityMode) -> Self {
        let (root, last) = (trace.initial(), trace.last());
        Self {
            strict: seeds_equal(root, last, EqualityMode::Strict).is_some(),
            witness: seeds_equal(root, last, mode),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub word: MutationWord,
    pub mode: EqualityMode,
    pub initial: SeedView,
    pub result: SeedView,
    /// Variable produced at each step, in order.
    pub produced: Vec<String>,
    /// Steps cancelled by free reduction.
    pub cancelled: Vec<bool>,
    pub cluster_set: Vec<String>,
    pub loop_status: LoopStatus,
}

impl TraceReport {
    pub fn new(trace: &PathTrace, mode: EqualityMode) -> Self {
        let survivors = trace
            .produced
            .iter()
            .zip(&trace.cancel_marks)
            .filter(|(_, c)| !**c)
            .map(|(x, _)| x.clone())
            .collect();
        Self {
            word: trace.word.clone(),
            mode,
            initial: trace.initial().into(),
            result: trace.last().into(),
            produced: trace.produced.iter().map(ToString::to_string).collect(),
            cancelled: trace.cancel_marks.clone(),
            cluster_set: ClusterSet(survivors).display(),
            loop_status: LoopStatus::of(trace, mode),
        }
    }
}

/// One node per vertex labeled `i`, one edge per arrow labeled `(d_ij,d_ji)`;
/// frozen vertices are drawn as filled boxes.
pub fn quiver_dot(q: &ValuedQuiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in 0..q.n() {
        let _ = if q.is_frozen(v) {
            writeln!(
                out,
                "  {} [label=\"{}\", shape=box, style=filled, frozen=true];",
                v + 1,
                v + 1
            )
        } else {
            writeln!(out, "  {} [label=\"{}\"];", v + 1, v + 1)
        };
    }
    for (i, j, val) in q.edges() {
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"({},{})\"];",
            i + 1,
            j + 1,
            val.forward,
            val.backward
        );
    }
    out.push_str("}\n");
    out
}

/// Pattern nodes labeled with their clusters, edges with 1-based directions.
pub fn pattern_dot(p: &ClusterPattern) -> String {
    let mut out = String::from("digraph pattern {\n");
    for (id, s) in p.nodes().iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{id} [label=\"{}\"];",
            s.display_cluster().join("\\n")
        );
    }
    for (from, k, to) in p.edges() {
        let _ = writeln!(out, "  n{from} -> n{to} [label=\"{}\"];", k + 1);
    }
    out.push_str("}\n");
    out
}
