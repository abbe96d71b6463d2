use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Construction input violates a structural requirement (bad edge, bad index, bad family parameter).
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Text-format parse failure, with 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not regular: vertex {vertex} has degree {found}, vertex 0 has degree {expected}")]
    NotRegular {
        vertex: usize,
        found: usize,
        expected: usize,
    },

    /// Layer counts differ between vertex pairs; `(base, other)` is the first violating pair.
    #[error("not distance-regular: {msg} (first violating pair: {base}, {other})")]
    NotDistanceRegular {
        base: usize,
        other: usize,
        msg: String,
    },

    /// The parameter array cannot belong to any distance-regular graph.
    #[error("infeasible intersection array: {0}")]
    InfeasibleArray(String),

    /// A quantity the theory forces to be constant or consistent came out otherwise.
    #[error("structural violation: {0}")]
    StructuralViolation(String),

    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
