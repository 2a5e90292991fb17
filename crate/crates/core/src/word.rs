use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A sequence of mutation directions in application order: the first entry is
/// applied first. Entries are 0-based vertices; text forms are 1-based and
/// comma separated (`"1,2,1"`).
///
/// Written right-to-left as a composition, `[1, 2, 3]` is `mu_3 mu_2 mu_1`.
///
/// Serialized as a list of 1-based labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Labels", into = "Labels")]
pub struct MutationWord(Vec<usize>);

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct Labels(Vec<usize>);

impl TryFrom<Labels> for MutationWord {
    type Error = WordParseError;

    fn try_from(labels: Labels) -> Result<Self, Self::Error> {
        if labels.0.contains(&0) {
            return Err(WordParseError::ZeroLabel);
        }
        Ok(Self::from_labels(&labels.0))
    }
}

impl From<MutationWord> for Labels {
    fn from(w: MutationWord) -> Self {
        Labels(w.0.iter().map(|k| k + 1).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("invalid vertex label {0:?} in mutation word")]
    BadLabel(String),
    #[error("vertex labels are 1-based; got 0")]
    ZeroLabel,
}

impl MutationWord {
    pub fn new(steps: Vec<usize>) -> Self {
        Self(steps)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// From 1-based labels; panics on a 0 label.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self(
            labels
                .iter()
                .map(|&l| l.checked_sub(1).expect("vertex labels are 1-based"))
                .collect(),
        )
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word read backwards (the inverse path).
    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// `{mu}`: the set of directions used.
    pub fn support(&self) -> std::collections::BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    /// Concatenation: `self` is applied first, then `other`.
    pub fn then(&self, other: &MutationWord) -> Self {
        let mut steps = self.0.clone();
        steps.extend_from_slice(&other.0);
        Self(steps)
    }

    pub fn repeated(&self, times: usize) -> Self {
        Self(self.0.repeat(times))
    }

    pub fn prefix(&self, len: usize) -> Self {
        Self(self.0[..len].to_vec())
    }

    /// Word with every direction relabeled through `map`.
    pub fn relabeled(&self, map: impl Fn(usize) -> usize) -> Self {
        Self(self.0.iter().map(|&k| map(k)).collect())
    }

    /// Removes adjacent equal pairs until none remain. Each direction is an
    /// involution, so this is word reduction in the free product of `n`
    /// copies of `Z/2`; the result is unique.
    pub fn free_reduced(&self) -> Self {
        let mut stack: Vec<usize> = Vec::with_capacity(self.0.len());
        for &k in &self.0 {
            if stack.last() == Some(&k) {
                stack.pop();
            } else {
                stack.push(k);
            }
        }
        Self(stack)
    }

    /// Marks the steps removed by [`MutationWord::free_reduced`].
    pub fn cancellation_marks(&self) -> Vec<bool> {
        let mut marks = vec![false; self.0.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (t, &k) in self.0.iter().enumerate() {
            match stack.last() {
                Some(&top) if self.0[top] == k => {
                    stack.pop();
                    marks[top] = true;
                    marks[t] = true;
                }
                _ => stack.push(t),
            }
        }
        marks
    }
}

impl From<Vec<usize>> for MutationWord {
    fn from(steps: Vec<usize>) -> Self {
        Self(steps)
    }
}

impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        write!(f, "{}", labels.join(","))
    }
}

impl FromStr for MutationWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                let label: usize = tok
                    .parse()
                    .map_err(|_| WordParseError::BadLabel(tok.to_string()))?;
                label.checked_sub(1).ok_or(WordParseError::ZeroLabel)
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}
