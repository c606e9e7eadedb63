use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("point set is not in general position")]
    NotInGeneralPosition,

    #[error("index {index} out of range for ground set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("vertex {vertex} out of range for {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("at most {max} vertices are supported, got {requested}")]
    TooManyVertices { requested: usize, max: usize },

    #[error("dimension parameter {given} does not match complex dimension {actual}")]
    DimensionParameter { given: isize, actual: isize },

    #[error("completion index {j} is below the complex dimension {dim}")]
    CompletionBelowDimension { j: isize, dim: isize },

    #[error("ground sets differ in size: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },

    #[error("family must contain at least one set")]
    EmptyFamily,

    #[error("{what} budget of {limit} exceeded")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("matroid oracle inconsistency: {0}")]
    OracleInconsistency(&'static str),

    #[error("counterexample construction failed after {attempts} attempts")]
    ConstructionFailed { attempts: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
