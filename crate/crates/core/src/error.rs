use thiserror::Error;

/// Reasons an [`Instance`](crate::graph_model::Instance) fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::graph_model::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} has an endpoint outside the graph")]
    DanglingEdge(usize, usize),
    #[error("start vertex {0} carries a weight")]
    WeightedStart(usize),
    #[error("vertex {0} has no weight")]
    MissingWeight(usize),
    #[error("vertex {0} is declared more than once")]
    DuplicateVertex(usize),
    #[error("vertex {0} holds more than one ship")]
    DuplicateShip(usize),
    #[error("weight table has {got} entries for {expected} vertices")]
    WeightCount { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid instance: {0}")]
    Invalid(#[from] InstanceError),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("node budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
