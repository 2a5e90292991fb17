//! Cartan–Killing labels, rank-3 weight-4 recognition and the isomorphism
//! test for finite-type seeds.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fixtures::Weight4Template;
use crate::groups::{compute_rooted_group, GroupCaps, GroupError};
use crate::pattern::{is_finite_type, ClusterPattern, FiniteTypeVerdict, InfiniteReason};
use crate::quiver::{
    enumerate_quiver_class, find_symmetry, Permutation, Sign, Symmetry, ValuedQuiver,
};
use crate::seed::{Seed, SeedError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("expected rank 3, got rank {0}")]
    WrongRank(usize),
    #[error("seed {which} is not known to be of finite type (verdict {verdict})")]
    NotFinite { which: usize, verdict: String },
    #[error("no member of the mutation class is a Dynkin orientation")]
    NoDynkinMember,
}

/// A connected Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n)
            | DynkinType::B(n)
            | DynkinType::C(n)
            | DynkinType::D(n)
            | DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A_{n}"),
            DynkinType::B(n) => write!(f, "B_{n}"),
            DynkinType::C(n) => write!(f, "C_{n}"),
            DynkinType::D(n) => write!(f, "D_{n}"),
            DynkinType::E(n) => write!(f, "E_{n}"),
            DynkinType::F4 => f.write_str("F_4"),
            DynkinType::G2 => f.write_str("G_2"),
        }
    }
}

/// Joins component labels with ` × `; the empty product (rank 0) is `∅`.
pub fn dynkin_label(types: &[DynkinType]) -> String {
    if types.is_empty() {
        return "∅".to_string();
    }
    types
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" × ")
}

/// Connected components of the mutable part, each as sorted vertices.
fn components(q: &ValuedQuiver) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in q.mutable_vertices() {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in q.neighborhood(v) {
                if !q.is_frozen(u) && seen.insert(u) {
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn mutable_neighbours(q: &ValuedQuiver, v: usize) -> Vec<usize> {
    q.neighborhood(v)
        .into_iter()
        .filter(|&u| !q.is_frozen(u))
        .collect()
}

/// Path through a component whose vertices all have degree at most two,
/// starting from an end.
fn as_path(q: &ValuedQuiver, comp: &[usize]) -> Option<Vec<usize>> {
    let start = *comp
        .iter()
        .find(|&&v| mutable_neighbours(q, v).len() <= 1)?;
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next: Vec<usize> = mutable_neighbours(q, cur)
            .into_iter()
            .filter(|&u| u != prev)
            .collect();
        match next.as_slice() {
            [] => break,
            [u] => {
                prev = cur;
                cur = *u;
                path.push(cur);
            }
            _ => return None,
        }
    }
    (path.len() == comp.len()).then_some(path)
}

fn component_type(q: &ValuedQuiver, comp: &[usize]) -> Option<DynkinType> {
    let n = comp.len();
    if n == 1 {
        return Some(DynkinType::A(1));
    }
    let edges: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|&v| {
            mutable_neighbours(q, v)
                .into_iter()
                .filter(move |&u| u > v)
                .map(move |u| (v, u))
        })
        .collect();
    // connected with n - 1 edges: a tree
    if edges.len() != n - 1 {
        return None;
    }
    let heavy: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| q.edge_weight(a, b) > 1)
        .collect();
    if let Some(path) = as_path(q, comp) {
        return match heavy.as_slice() {
            [] => Some(DynkinType::A(n)),
            [(a, b)] => {
                let w = q.edge_weight(*a, *b);
                let pos = path
                    .iter()
                    .position(|v| v == a)
                    .min(path.iter().position(|v| v == b))?;
                match (w, n) {
                    (3, 2) => Some(DynkinType::G2),
                    (2, 2) => Some(DynkinType::B(2)),
                    (2, 4) if pos == 1 => Some(DynkinType::F4),
                    (2, _) if pos == 0 || pos == n - 2 => {
                        // orient the double edge as inner -> end
                        let (inner, end) = if pos == 0 {
                            (path[1], path[0])
                        } else {
                            (path[n - 2], path[n - 1])
                        };
                        // |b_end,inner| = 2 makes the end vertex short: B_n
                        if q.b(end, inner).abs() == 2 {
                            Some(DynkinType::B(n))
                        } else {
                            Some(DynkinType::C(n))
                        }
                    }
                    _ => None,
                }
            }
            _ => None,
        };
    }
    if !heavy.is_empty() {
        return None;
    }
    let branch: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&v| mutable_neighbours(q, v).len() >= 3)
        .collect();
    let [centre] = branch.as_slice() else {
        return None;
    };
    let nbrs = mutable_neighbours(q, *centre);
    if nbrs.len() != 3 {
        return None;
    }
    let mut arms: Vec<usize> = nbrs
        .iter()
        .map(|&first| {
            let mut len = 1;
            let (mut prev, mut cur) = (*centre, first);
            loop {
                let next: Vec<usize> = mutable_neighbours(q, cur)
                    .into_iter()
                    .filter(|&u| u != prev)
                    .collect();
                match next.as_slice() {
                    [u] => {
                        prev = cur;
                        cur = *u;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Some(DynkinType::D(n)),
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(DynkinType::E(n)),
        _ => None,
    }
}

/// Dynkin types of the components of the mutable part when its valued
/// underlying graph is a Dynkin diagram; components are ordered by their
/// smallest vertex.
pub fn dynkin_type(q: &ValuedQuiver) -> Option<Vec<DynkinType>> {
    components(q).iter().map(|c| component_type(q, c)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Finite,
    Infinite,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// A class member shaped as a Dynkin orientation, and the pattern node
    /// carrying it.
    DynkinMember {
        node: usize,
        quiver: ValuedQuiver,
    },
    Obstruction {
        reason: InfiniteReason,
    },
    Inconclusive {
        explored: usize,
        frontier: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub dynkin_label: Option<String>,
    pub components: Vec<DynkinType>,
    pub evidence: Evidence,
}

/// First node quiver of a finite pattern (in discovery order) that is a
/// Dynkin orientation.
pub fn dynkin_member(pattern: &ClusterPattern) -> Option<(usize, ValuedQuiver, Vec<DynkinType>)> {
    pattern
        .nodes()
        .iter()
        .enumerate()
        .find_map(|(i, s)| dynkin_type(&s.quiver).map(|t| (i, s.quiver.clone(), t)))
}

pub fn classify_finite_type(s: &Seed, cap: usize) -> Result<ClassificationReport, ClassifyError> {
    match is_finite_type(s, cap)? {
        FiniteTypeVerdict::Finite(p) => {
            let (node, quiver, components) =
                dynkin_member(&p).ok_or(ClassifyError::NoDynkinMember)?;
            Ok(ClassificationReport {
                verdict: Verdict::Finite,
                dynkin_label: Some(dynkin_label(&components)),
                components,
                evidence: Evidence::DynkinMember { node, quiver },
            })
        }
        FiniteTypeVerdict::Infinite(reason) => Ok(ClassificationReport {
            verdict: Verdict::Infinite,
            dynkin_label: None,
            components: Vec::new(),
            evidence: Evidence::Obstruction { reason },
        }),
        FiniteTypeVerdict::Unknown { explored, frontier } => Ok(ClassificationReport {
            verdict: Verdict::Unknown,
            dynkin_label: None,
            components: Vec::new(),
            evidence: Evidence::Inconclusive { explored, frontier },
        }),
    }
}

/// A class member matching one of the rank-3 weight-4 templates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight4Match {
    pub template: String,
    pub member: ValuedQuiver,
    /// Carries the template onto the member's mutable part.
    pub symmetry: Symmetry,
}

fn template_of(name: &str) -> Option<Weight4Template> {
    Weight4Template::ALL.into_iter().find(|t| t.name() == name)
}

impl Weight4Match {
    pub fn template(&self) -> Option<Weight4Template> {
        template_of(&self.template)
    }
}

/// Searches the class of a rank-3 quiver, breadth-first, for a member whose
/// mutable part is a relabeling of one of the templates.
pub fn recognize_weight4_rank3(
    q: &ValuedQuiver,
    cap: usize,
) -> Result<Option<Weight4Match>, ClassifyError> {
    if q.rank() != 3 {
        return Err(ClassifyError::WrongRank(q.rank()));
    }
    let templates: Vec<(Weight4Template, ValuedQuiver)> = Weight4Template::ALL
        .iter()
        .map(|&t| (t, t.quiver()))
        .collect();
    let class = enumerate_quiver_class(q, cap);
    for member in class.members() {
        let part = member.mutable_part();
        for (t, tq) in &templates {
            if let Some(symmetry) = find_symmetry(tq, &part, false) {
                return Ok(Some(Weight4Match {
                    template: t.name(),
                    member: member.clone(),
                    symmetry,
                }));
            }
        }
    }
    Ok(None)
}

/// Invariants compared by [`isomorphic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub rank: usize,
    pub group_order: usize,
    pub coset_count: usize,
    pub variable_count: usize,
    pub class_weight: u64,
}

impl Invariants {
    /// Names of the fields that differ.
    pub fn mismatches(&self, other: &Invariants) -> Vec<String> {
        let pairs = [
            ("rank", self.rank as u64, other.rank as u64),
            (
                "group_order",
                self.group_order as u64,
                other.group_order as u64,
            ),
            (
                "coset_count",
                self.coset_count as u64,
                other.coset_count as u64,
            ),
            (
                "variable_count",
                self.variable_count as u64,
                other.variable_count as u64,
            ),
            ("class_weight", self.class_weight, other.class_weight),
        ];
        pairs
            .iter()
            .filter(|(_, a, b)| a != b)
            .map(|(name, _, _)| name.to_string())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    /// Node of the second pattern whose quiver is symmetric to the first root.
    pub node: usize,
    pub permutation: Permutation,
    pub sign: Sign,
    pub quiver: ValuedQuiver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoRoute {
    WitnessFound,
    InvariantOnly,
    ExhaustedSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub isomorphic: bool,
    pub route: IsoRoute,
    pub witness: Option<IsoWitness>,
    pub invariants: [Invariants; 2],
    pub mismatched: Vec<String>,
    /// The invariant route (all invariants equal) and the witness route
    /// reach the same answer.
    pub routes_agree: bool,
}

fn invariants(
    s: &Seed,
    pattern: &ClusterPattern,
    caps: GroupCaps,
) -> Result<Invariants, ClassifyError> {
    let group = compute_rooted_group(s, pattern.mode(), caps)?;
    Ok(Invariants {
        rank: s.quiver.rank(),
        group_order: group.order(),
        coset_count: pattern.len(),
        variable_count: pattern.variables().len(),
        class_weight: enumerate_quiver_class(&s.quiver, caps.pattern_cap).mutable_weight(),
    })
}

fn finite_pattern(s: &Seed, which: usize, cap: usize) -> Result<ClusterPattern, ClassifyError> {
    match is_finite_type(s, cap)? {
        FiniteTypeVerdict::Finite(p) => Ok(*p),
        v => Err(ClassifyError::NotFinite {
            which,
            verdict: v.label().to_string(),
        }),
    }
}

/// Decides whether two finite-type seeds give isomorphic cluster algebras.
///
/// Both routes always run: the invariants of each side, and a search over
/// every node of the second pattern for a quiver symmetric (possibly up to
/// sign) to the first root quiver. The verdict is the witness route's,
/// which is exhaustive on a complete pattern.
pub fn isomorphic(s1: &Seed, s2: &Seed, cap: usize) -> Result<IsoReport, ClassifyError> {
    let p1 = finite_pattern(s1, 1, cap)?;
    let p2 = finite_pattern(s2, 2, cap)?;
    let caps = GroupCaps {
        pattern_cap: cap,
        ..GroupCaps::default()
    };
    let inv = [invariants(s1, &p1, caps)?, invariants(s2, &p2, caps)?];
    let mismatched = inv[0].mismatches(&inv[1]);
    let witness = if s1.n() == s2.n() {
        p2.nodes().iter().enumerate().find_map(|(node, t)| {
            find_symmetry(&s1.quiver, &t.quiver, true).map(|sym| IsoWitness {
                node,
                permutation: sym.permutation,
                sign: sym.sign,
                quiver: t.quiver.clone(),
            })
        })
    } else {
        None
    };
    let route = if witness.is_some() {
        IsoRoute::WitnessFound
    } else if !mismatched.is_empty() {
        IsoRoute::InvariantOnly
    } else {
        IsoRoute::ExhaustedSearch
    };
    Ok(IsoReport {
        isomorphic: witness.is_some(),
        route,
        routes_agree: witness.is_some() == mismatched.is_empty(),
        witness,
        invariants: inv,
        mismatched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn label(q: &ValuedQuiver) -> Option<String> {
        dynkin_type(q).map(|t| dynkin_label(&t))
    }

    #[test]
    fn dynkin_shapes() {
        assert_eq!(label(&fixtures::a2()).as_deref(), Some("A_2"));
        assert_eq!(label(&fixtures::b2()).as_deref(), Some("B_2"));
        assert_eq!(label(&fixtures::b2().opposite()).as_deref(), Some("B_2"));
        assert_eq!(label(&fixtures::g2()).as_deref(), Some("G_2"));
        assert_eq!(label(&fixtures::b3()).as_deref(), Some("B_3"));
        assert_eq!(label(&fixtures::c3()).as_deref(), Some("C_3"));
        assert_eq!(label(&fixtures::d4()).as_deref(), Some("D_4"));
        assert_eq!(label(&fixtures::f4()).as_deref(), Some("F_4"));
        assert_eq!(label(&fixtures::e6()).as_deref(), Some("E_6"));
        assert_eq!(
            label(&fixtures::a1_power(3)).as_deref(),
            Some("A_1 × A_1 × A_1")
        );
        assert_eq!(label(&fixtures::cycle3()), None);
        assert_eq!(label(&fixtures::w4()), None);
    }

    #[test]
    fn b_and_c_follow_the_short_end() {
        // reversing the path keeps the type
        let rev = fixtures::b3()
            .permuted(&Permutation::transposition(3, 0, 2))
            .unwrap();
        assert_eq!(label(&rev).as_deref(), Some("B_3"));
        let rev = fixtures::c3()
            .permuted(&Permutation::transposition(3, 0, 2))
            .unwrap();
        assert_eq!(label(&rev).as_deref(), Some("C_3"));
    }

    #[test]
    fn frozen_vertices_are_ignored() {
        let q = fixtures::a_n(4).freeze(&[0, 1, 2].into()).unwrap();
        assert_eq!(label(&q).as_deref(), Some("A_3"));
    }

    #[test]
    fn classification_reports() {
        let r = classify_finite_type(&Seed::initial(&fixtures::a2()), 1000).unwrap();
        assert_eq!(
            (r.verdict, r.dynkin_label.as_deref()),
            (Verdict::Finite, Some("A_2"))
        );
        let r = classify_finite_type(&Seed::initial(&fixtures::b2()), 1000).unwrap();
        assert_eq!(r.dynkin_label.as_deref(), Some("B_2"));
        // the 3-cycle is labelled through an acyclic member of its class
        let r = classify_finite_type(&Seed::initial(&fixtures::cycle3()), 1000).unwrap();
        assert_eq!(r.dynkin_label.as_deref(), Some("A_3"));
        let Evidence::DynkinMember { quiver, .. } = &r.evidence else {
            panic!()
        };
        assert!(dynkin_type(quiver).is_some());
        let r = classify_finite_type(&Seed::initial(&fixtures::w4()), 1000).unwrap();
        assert_eq!(r.verdict, Verdict::Infinite);
        assert!(r.dynkin_label.is_none());
        assert!(matches!(r.evidence, Evidence::Obstruction { .. }));
    }

    #[test]
    fn weight_four_templates() {
        let m = recognize_weight4_rank3(&Weight4Template::Q32.quiver(), 1000)
            .unwrap()
            .unwrap();
        assert_eq!(m.template(), Some(Weight4Template::Q32));
        let m = recognize_weight4_rank3(&Weight4Template::Q31(2).quiver(), 1000)
            .unwrap()
            .unwrap();
        assert_eq!(m.template, "Q^2_3(1)");
        let m = recognize_weight4_rank3(&Weight4Template::Q33.quiver(), 1000)
            .unwrap()
            .unwrap();
        assert_eq!(m.template(), Some(Weight4Template::Q33));
        assert_eq!(
            recognize_weight4_rank3(&fixtures::cycle3(), 1000).unwrap(),
            None
        );
        assert_eq!(
            recognize_weight4_rank3(&fixtures::a2(), 10),
            Err(ClassifyError::WrongRank(2))
        );
    }

    #[test]
    fn isomorphism_examples() {
        let a3 = fixtures::a3();
        let swapped = a3.permuted(&Permutation::transposition(3, 0, 2)).unwrap();
        let r = isomorphic(&Seed::initial(&a3), &Seed::initial(&swapped), 10_000).unwrap();
        assert!(r.isomorphic && r.routes_agree);
        let w = r.witness.unwrap();
        assert_eq!((w.node, w.permutation.images()), (0, &[2, 1, 0][..]));

        let r = isomorphic(&Seed::initial(&a3), &Seed::initial(&fixtures::b3()), 10_000).unwrap();
        assert!(!r.isomorphic && r.routes_agree);
        assert!(r.mismatched.contains(&"class_weight".to_string()));

        let r = isomorphic(
            &Seed::initial(&fixtures::a2()),
            &Seed::initial(&fixtures::a2().opposite()),
            1000,
        )
        .unwrap();
        assert!(r.isomorphic);

        let err =
            isomorphic(&Seed::initial(&a3), &Seed::initial(&fixtures::w4()), 1000).unwrap_err();
        assert!(matches!(err, ClassifyError::NotFinite { which: 2, .. }));
    }
}
