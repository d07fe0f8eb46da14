use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid crossing specification: {0}")]
    InvalidCrossing(String),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("graph contains K{} on vertices {:?}", .0.len(), .0)]
    CliqueFound(Vec<usize>),
    #[error("oracle integrity violation: {0}")]
    OracleIntegrity(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
