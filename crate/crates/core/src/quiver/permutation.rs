use std::fmt;

use serde::{Deserialize, Serialize};

use super::QuiverError;

/// A bijection of `{0, .., n-1}`; `images[i]` is the image of vertex `i`.
/// Serialized as the list of 1-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Images", into = "Images")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image vector, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, QuiverError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n {
                return Err(QuiverError::VertexOutOfRange { vertex: j, n });
            }
            if seen[j] {
                return Err(QuiverError::SizeMismatch {
                    expected: n,
                    found: n - 1,
                });
            }
            seen[j] = true;
        }
        Ok(Self { images })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Self {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    /// Disjoint cycles of length at least two, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct Images(Vec<usize>);

impl TryFrom<Images> for Permutation {
    type Error = QuiverError;

    fn try_from(images: Images) -> Result<Self, Self::Error> {
        if images.0.contains(&0) {
            return Err(QuiverError::ZeroLabel);
        }
        Self::from_images(images.0.iter().map(|i| i - 1).collect())
    }
}

impl From<Permutation> for Images {
    fn from(p: Permutation) -> Self {
        Images(p.images.iter().map(|i| i + 1).collect())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = QuiverError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Self::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Cycle notation with 1-based labels; the identity prints as `id`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            let labels: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "({})", labels.join(" "))?;
        }
        Ok(())
    }
}
