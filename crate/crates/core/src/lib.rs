//! Exact engine for cluster algebras of valued quivers.
//!
//! Vertices are 0-based throughout the API; every text rendering is 1-based.

pub mod classify;
pub mod fixtures;
pub mod groups;
pub mod io;
pub mod laurent;
pub mod pattern;
pub mod quiver;
pub mod seed;
pub mod word;

pub use classify::{
    classify_finite_type, dynkin_label, dynkin_type, isomorphic, recognize_weight4_rank3,
    ClassificationReport, ClassifyError, DynkinType, Evidence, Invariants, IsoReport, IsoRoute,
    IsoWitness, Verdict, Weight4Match,
};
pub use groups::{
    cluster_order, cluster_set, compute_rooted_group, coset_set, enumerate_rooted_loops,
    equivalent, is_global_loop, is_rooted_loop, rebase_group, reduce_word, ClusterSet, Coset,
    CosetSet, Equivalence, GroupCaps, GroupElement, GroupError, RebasedGroup, RootedLoop,
    RootedMutationGroup, MAX_GROUP_VARIABLES,
};
pub use io::{
    pattern_dot, quiver_dot, CosetReport, GroupReport, LoopStatus, LoopsReport, PatternReport,
    SeedView, TraceReport,
};
pub use laurent::{DenominatorVector, LaurentError, LaurentPoly};
pub use pattern::{
    enumerate_cluster_pattern, is_finite_type, is_finite_type_in, ClusterPattern,
    FiniteTypeVerdict, InfiniteReason, DEFAULT_PATTERN_CAP,
};
pub use quiver::{
    canonical_key, enumerate_quiver_class, find_realizing_sequence, find_symmetry, ExchangeMatrix,
    Permutation, QuiverClass, QuiverError, QuiverFile, Sign, Symmetry, Valuation, ValuedQuiver,
};
pub use seed::{seeds_equal, EqualityMode, ModeParseError, PathTrace, Seed, SeedError};
pub use word::{MutationWord, WordParseError};
