use thiserror::Error;

/// Errors raised while building, converting or mutating valued quivers.
///
/// Vertices are reported with 1-based labels, matching the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("vertex {} is out of range for a quiver on {n} vertices", .vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {}", .0 + 1)]
    LoopEdge(usize),
    #[error("edges {a}->{b} and {b}->{a} form a 2-cycle", a = .0 + 1, b = .1 + 1)]
    TwoCycle(usize, usize),
    #[error("edge {}->{} given twice", .0 + 1, .1 + 1)]
    DuplicateEdge(usize, usize),
    #[error("edge {}->{} has a non-positive valuation entry", .0 + 1, .1 + 1)]
    NonPositiveValuation(usize, usize),
    #[error("symmetrizer has length {found}, expected {expected}")]
    SymmetrizerLength { expected: usize, found: usize },
    #[error("symmetrizer entry for vertex {} is not positive", .0 + 1)]
    NonPositiveSymmetrizer(usize),
    #[error("symmetrizer violates d_i*d_ij = d_ji*d_j on edge {}->{}", .0 + 1, .1 + 1)]
    SymmetrizerMismatch(usize, usize),
    #[error("valuations admit no consistent symmetrizer (cycle through vertex {})", .0 + 1)]
    InconsistentSymmetrizer(usize),
    #[error("matrix is not skew-symmetrizable at entries ({a},{b}) and ({b},{a})", a = .0 + 1, b = .1 + 1)]
    NotSkewSymmetrizable(usize, usize),
    #[error("matrix must be square with a zero diagonal")]
    MatrixShape,
    #[error("vertex {} is frozen and cannot be mutated", .0 + 1)]
    FrozenVertex(usize),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("vertex labels are 1-based; got 0")]
    ZeroLabel,
    #[error("integer overflow while mutating valuations")]
    Overflow,
}
