use serde::{Deserialize, Serialize};

use super::{QuiverError, Valuation, ValuedQuiver};

/// One arrow of a quiver file, with 1-based endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub from: usize,
    pub to: usize,
    /// `[d_ij, d_ji]`
    pub val: [u64; 2],
}

/// Quiver file schema:
///
/// ```json
/// {"n": 2, "edges": [{"from": 1, "to": 2, "val": [1, 2]}], "symmetrizer": [2, 1], "frozen": []}
/// ```
///
/// `symmetrizer` and `frozen` are optional; a missing symmetrizer is inferred.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizer: Option<Vec<u64>>,
    #[serde(default)]
    pub frozen: Vec<usize>,
}

fn zero_based(label: usize) -> Result<usize, QuiverError> {
    label.checked_sub(1).ok_or(QuiverError::ZeroLabel)
}

impl TryFrom<QuiverFile> for ValuedQuiver {
    type Error = QuiverError;

    fn try_from(f: QuiverFile) -> Result<Self, Self::Error> {
        let edges = f
            .edges
            .iter()
            .map(|e| {
                Ok((
                    zero_based(e.from)?,
                    zero_based(e.to)?,
                    Valuation::new(e.val[0], e.val[1]),
                ))
            })
            .collect::<Result<Vec<_>, QuiverError>>()?;
        let frozen = f
            .frozen
            .iter()
            .map(|&v| zero_based(v))
            .collect::<Result<Vec<_>, _>>()?;
        ValuedQuiver::new(f.n, edges, f.symmetrizer, frozen)
    }
}

impl From<ValuedQuiver> for QuiverFile {
    fn from(q: ValuedQuiver) -> Self {
        QuiverFile::from(&q)
    }
}

impl From<&ValuedQuiver> for QuiverFile {
    fn from(q: &ValuedQuiver) -> Self {
        QuiverFile {
            n: q.n(),
            edges: q
                .edges()
                .map(|(i, j, v)| EdgeRecord {
                    from: i + 1,
                    to: j + 1,
                    val: [v.forward, v.backward],
                })
                .collect(),
            symmetrizer: Some(q.symmetrizer().to_vec()),
            frozen: q.frozen().iter().map(|v| v + 1).collect(),
        }
    }
}
