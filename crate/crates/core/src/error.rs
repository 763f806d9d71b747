use thiserror::Error;

use crate::geometry::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("search budget exhausted after {nodes_explored} nodes")]
    BudgetExhausted { nodes_explored: u64 },

    #[error("graph is not a forest")]
    NotAForest,

    #[error("ordering realizes a forbidden pattern at ranks {witness:?}")]
    OrderingNotAvoiding { witness: Vec<usize> },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("representation has {shapes} shapes but the graph has {vertices} vertices")]
    ShapeCountMismatch { shapes: usize, vertices: usize },

    #[error("degenerate segment: both endpoints coincide")]
    DegenerateSegment,

    #[error("invalid shape for vertex {vertex}: {message}")]
    InvalidShape { vertex: usize, message: String },

    #[error("representation failed verification: {0}")]
    VerificationFailed(Report),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
