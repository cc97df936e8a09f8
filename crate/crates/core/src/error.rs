use crate::hypergraph::VertexSet;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library proper. File-format problems live in
/// [`crate::format::FormatError`].
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("edge has {got} distinct vertices, expected {want}")]
    WrongEdgeSize { got: u32, want: u32 },

    #[error("dimensions must satisfy 2 <= r <= n <= 64 (got n={n}, r={r})")]
    BadDimensions { n: u32, r: u32 },

    #[error("uniformity mismatch: {left} vs {right}")]
    UniformityMismatch { left: u32, right: u32 },

    #[error("combined vertex count {0} exceeds 64")]
    TooManyVertices(u64),

    #[error("vertex set has {got} vertices, need at least {need}")]
    SetTooSmall { got: u32, need: u32 },

    #[error("vertex {0} has zero multiplicity")]
    ZeroMultiplicity(u32),

    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypergraph lacks property ({q},{p}); counterexample {witness}")]
    MissingProperty { q: u32, p: u32, witness: VertexSet },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("density point at n={n} was not proved optimal within the node budget")]
    InexactDensityPoint { n: u32 },

    #[error(
        "density monotonicity violated between n={left} ({left_density}) and n={right} ({right_density})"
    )]
    MonotonicityViolation {
        left: u32,
        right: u32,
        left_density: f64,
        right_density: f64,
    },
}
