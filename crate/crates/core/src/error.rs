use thiserror::Error;

/// Errors surfaced by graph construction, parsing, and the guarded
/// brute-force evaluators. Fatal contract violations (arithmetic overflow,
/// a negative cycle reaching an algorithm that assumed none) panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `line` is 1-based in the original input.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// Graphs need at least one vertex.
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,

    /// An edge endpoint outside the vertex set.
    #[error("vertex index {found} out of range for {n} vertices")]
    VertexOutOfRange { found: usize, n: usize },

    /// An edge weight whose magnitude exceeds the declared bound.
    #[error("edge weight {weight} exceeds the declared magnitude bound {bound}")]
    WeightOutOfBound { weight: i64, bound: i64 },

    /// A negative self-loop is a negative cycle of length one.
    #[error("negative self-loop on vertex {vertex} forms a negative cycle")]
    NegativeSelfLoop { vertex: usize },

    /// (n + 1) * bound must stay within the overflow guard so that any
    /// simple-path weight plus one edge fits comfortably in an i64.
    #[error(
        "magnitude bound {bound} too large for {n} vertices: (n + 1) * bound exceeds 2^62 - 1"
    )]
    BoundOverflow { bound: i64, n: usize },

    /// Exhaustive path enumeration is capped to small vertex counts.
    #[error("graph too large for exhaustive path enumeration: {n} vertices (limit {limit})")]
    EnumerationGuard { n: usize, limit: usize },

    /// The recursive realization check is capped to short paths.
    #[error("path too long for the recursive realization check: {len} vertices (limit {limit})")]
    RealizationGuard { len: usize, limit: usize },

    /// Paths must consist of pairwise-distinct vertices.
    #[error("path vertices must be pairwise distinct")]
    NonSimplePath,

    /// Paths contain at least one vertex.
    #[error("path must contain at least one vertex")]
    EmptyPath,
}
