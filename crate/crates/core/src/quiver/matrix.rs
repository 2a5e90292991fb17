use std::collections::BTreeMap;
use std::fmt;

use super::{infer_symmetrizer, QuiverError, Valuation};

/// A skew-symmetrizable integer matrix `B` with its symmetrizer `d`
/// (`d_i * b_ij == -d_j * b_ji`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i64>,
    symmetrizer: Vec<u64>,
}

impl ExchangeMatrix {
    pub(crate) fn from_parts(n: usize, entries: Vec<i64>, symmetrizer: Vec<u64>) -> Self {
        Self {
            n,
            entries,
            symmetrizer,
        }
    }

    /// Validates skew-symmetrizability against the given symmetrizer.
    pub fn new(rows: &[Vec<i64>], symmetrizer: Vec<u64>) -> Result<Self, QuiverError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(QuiverError::MatrixShape);
        }
        let m = Self {
            n,
            entries: rows.concat(),
            symmetrizer,
        };
        m.validate()?;
        Ok(m)
    }

    /// Like [`ExchangeMatrix::new`] but solves for the minimal symmetrizer.
    pub fn with_inferred_symmetrizer(rows: &[Vec<i64>]) -> Result<Self, QuiverError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(QuiverError::MatrixShape);
        }
        let mut edges = BTreeMap::new();
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(QuiverError::MatrixShape);
            }
            for j in 0..n {
                let (bij, bji) = (rows[i][j], rows[j][i]);
                if bij.signum() != -bji.signum() {
                    return Err(QuiverError::NotSkewSymmetrizable(i.min(j), i.max(j)));
                }
                if bij > 0 {
                    edges.insert((i, j), Valuation::new(bij as u64, (-bji) as u64));
                }
            }
        }
        let d = infer_symmetrizer(n, &edges)?;
        Self::new(rows, d)
    }

    pub(crate) fn validate(&self) -> Result<(), QuiverError> {
        if self.entries.len() != self.n * self.n {
            return Err(QuiverError::MatrixShape);
        }
        if self.symmetrizer.len() != self.n {
            return Err(QuiverError::SymmetrizerLength {
                expected: self.n,
                found: self.symmetrizer.len(),
            });
        }
        if let Some(i) = self.symmetrizer.iter().position(|&d| d == 0) {
            return Err(QuiverError::NonPositiveSymmetrizer(i));
        }
        for i in 0..self.n {
            if self.get(i, i) != 0 {
                return Err(QuiverError::MatrixShape);
            }
            for j in (i + 1)..self.n {
                let lhs = self.symmetrizer[i] as i128 * self.get(i, j) as i128;
                let rhs = -(self.symmetrizer[j] as i128) * self.get(j, i) as i128;
                if lhs != rhs || self.get(i, j).signum() != -self.get(j, i).signum() {
                    return Err(QuiverError::NotSkewSymmetrizable(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.symmetrizer
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_skew_symmetrizable(&self) -> bool {
        self.validate().is_ok()
    }

    /// Fomin–Zelevinsky matrix mutation in direction `k`:
    /// `b'_ij = -b_ij` if `k ∈ {i, j}`, otherwise
    /// `b_ij + sign(b_ik) * max(0, b_ik * b_kj)`.
    pub fn mutate(&self, k: usize) -> Result<Self, QuiverError> {
        if k >= self.n {
            return Err(QuiverError::VertexOutOfRange {
                vertex: k,
                n: self.n,
            });
        }
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let bij = self.get(i, j);
                out[i * n + j] = if i == k || j == k {
                    -bij
                } else {
                    let bik = self.get(i, k);
                    let prod = bik
                        .checked_mul(self.get(k, j))
                        .ok_or(QuiverError::Overflow)?;
                    bij.checked_add(bik.signum() * prod.max(0))
                        .ok_or(QuiverError::Overflow)?
                };
            }
        }
        Ok(Self {
            n,
            entries: out,
            symmetrizer: self.symmetrizer.clone(),
        })
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
