//! Seeds, the exchange relation, word application and seed equality.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly};
use crate::quiver::{Permutation, QuiverError, Sign, Symmetry, ValuedQuiver};
use crate::word::MutationWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("exchange relation failed: {0}")]
    Laurent(#[from] LaurentError),
    #[error("seeds have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
}

/// A cluster `X` (one Laurent polynomial per vertex, in the initial
/// variables) together with a valued quiver.
///
/// Frozen vertices keep their initial variable forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub cluster: Vec<LaurentPoly>,
    pub quiver: ValuedQuiver,
}

impl Seed {
    /// `((x1, .., xn), q)`.
    pub fn initial(q: &ValuedQuiver) -> Self {
        let n = q.n();
        Self {
            cluster: (0..n).map(|i| LaurentPoly::var(n, i)).collect(),
            quiver: q.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Exchange relation in direction `k`:
    /// `x_k' = (prod_{b_jk > 0} x_j^{b_jk} + prod_{b_jk < 0} x_j^{-b_jk}) / x_k`.
    pub fn mutate(&self, k: usize) -> Result<Self, SeedError> {
        let quiver = self.quiver.mutate(k)?;
        let nvars = self.cluster[k].nvars();
        let mut plus = LaurentPoly::one(nvars);
        let mut minus = LaurentPoly::one(nvars);
        for j in 0..self.n() {
            let b = self.quiver.b(j, k);
            if b > 0 {
                plus = &plus * &self.cluster[j].pow(b as u32);
            } else if b < 0 {
                minus = &minus * &self.cluster[j].pow((-b) as u32);
            }
        }
        let fresh = (&plus + &minus).exact_div(&self.cluster[k])?;
        let mut cluster = self.cluster.clone();
        cluster[k] = fresh;
        Ok(Self { cluster, quiver })
    }

    /// Applies `w` step by step and records the whole path.
    pub fn apply_word(&self, w: &MutationWord) -> Result<PathTrace, SeedError> {
        let mut seeds = Vec::with_capacity(w.len() + 1);
        let mut produced = Vec::with_capacity(w.len());
        seeds.push(self.clone());
        for &k in w.steps() {
            let next = seeds.last().expect("nonempty").mutate(k)?;
            produced.push(next.cluster[k].clone());
            seeds.push(next);
        }
        Ok(PathTrace {
            cancel_marks: w.cancellation_marks(),
            seeds,
            produced,
            word: w.clone(),
        })
    }

    /// The seed reached by `w`, without keeping the path.
    pub fn apply(&self, w: &MutationWord) -> Result<Self, SeedError> {
        w.steps().iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// `sigma(X, Q)` with the quiver reversed when `sign` is `Minus`: the entry
    /// at position `i` moves to `sigma(i)`.
    pub fn transformed(&self, symmetry: &Symmetry) -> Result<Self, SeedError> {
        let sigma = &symmetry.permutation;
        if sigma.len() != self.n() {
            return Err(SeedError::SizeMismatch(sigma.len(), self.n()));
        }
        let mut cluster = self.cluster.clone();
        for (i, x) in self.cluster.iter().enumerate() {
            cluster[sigma.apply(i)] = x.clone();
        }
        let mut quiver = self.quiver.permuted(sigma)?;
        if symmetry.sign == Sign::Minus {
            quiver = quiver.opposite();
        }
        Ok(Self { cluster, quiver })
    }

    /// Cluster entries in factored display form.
    pub fn display_cluster(&self) -> Vec<String> {
        self.cluster.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({}), {})",
            self.display_cluster().join(", "),
            self.quiver
        )
    }
}

/// The path `P_mu` of a word: every seed visited, the variable produced at
/// each step and which steps cancel under free reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathTrace {
    pub seeds: Vec<Seed>,
    pub produced: Vec<LaurentPoly>,
    pub cancel_marks: Vec<bool>,
    pub word: MutationWord,
}

impl PathTrace {
    pub fn initial(&self) -> &Seed {
        &self.seeds[0]
    }

    pub fn last(&self) -> &Seed {
        self.seeds
            .last()
            .expect("a trace holds at least the start seed")
    }

    /// `[mu]_Q`: the quivers along the path.
    pub fn quivers(&self) -> impl Iterator<Item = &ValuedQuiver> {
        self.seeds.iter().map(|s| &s.quiver)
    }
}

/// How two seeds are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EqualityMode {
    /// Same ordered cluster and same labeled quiver.
    Strict,
    /// Equal up to a relabeling `sigma`, and up to reversing every arrow when
    /// `allow_sign` is set.
    Symmetric { allow_sign: bool },
}

impl Default for EqualityMode {
    fn default() -> Self {
        EqualityMode::Symmetric { allow_sign: true }
    }
}

impl fmt::Display for EqualityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EqualityMode::Strict => "strict",
            EqualityMode::Symmetric { allow_sign: true } => "symmetric",
            EqualityMode::Symmetric { allow_sign: false } => "symmetric-unsigned",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown equality mode {0:?} (expected strict, symmetric or symmetric-unsigned)")]
pub struct ModeParseError(pub String);

impl FromStr for EqualityMode {
    type Err = ModeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "strict" => Ok(EqualityMode::Strict),
            "symmetric" => Ok(EqualityMode::Symmetric { allow_sign: true }),
            "symmetric-unsigned" => Ok(EqualityMode::Symmetric { allow_sign: false }),
            _ => Err(ModeParseError(s.to_string())),
        }
    }
}

/// Returns a witness `(sigma, sign)` with `s2 = sign * sigma(s1)` under `mode`.
///
/// Cluster entries within a seed are distinct, so `sigma` is forced by the
/// clusters: `s2.cluster[sigma(i)] = s1.cluster[i]`. The sign only reverses
/// the quiver.
pub fn seeds_equal(s1: &Seed, s2: &Seed, mode: EqualityMode) -> Option<Symmetry> {
    if s1.n() != s2.n() {
        return None;
    }
    let n = s1.n();
    match mode {
        EqualityMode::Strict => (s1.cluster == s2.cluster && s1.quiver.same_shape(&s2.quiver))
            .then(|| Symmetry {
                permutation: Permutation::identity(n),
                sign: Sign::Plus,
            }),
        EqualityMode::Symmetric { allow_sign } => {
            let position: HashMap<&LaurentPoly, usize> =
                s2.cluster.iter().enumerate().map(|(i, x)| (x, i)).collect();
            let images: Vec<usize> = s1
                .cluster
                .iter()
                .map(|x| position.get(x).copied())
                .collect::<Option<Vec<_>>>()?;
            let permutation = Permutation::from_images(images).ok()?;
            let moved = s1.quiver.permuted(&permutation).ok()?;
            if moved.same_shape(&s2.quiver) {
                Some(Symmetry {
                    permutation,
                    sign: Sign::Plus,
                })
            } else if allow_sign && moved.same_shape(&s2.quiver.opposite()) {
                Some(Symmetry {
                    permutation,
                    sign: Sign::Minus,
                })
            } else {
                None
            }
        }
    }
}
