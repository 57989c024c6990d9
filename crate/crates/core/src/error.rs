use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph order {order} is outside the supported range 1..={max}")]
    UnsupportedOrder { order: usize, max: usize },
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph order {order} is too small (need at least {min})")]
    OrderTooSmall { order: usize, min: usize },
    #[error("duplicate vertex {0} in code")]
    DuplicateCodeVertex(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("({a}, {b}, {c}) is not realizable")]
    NotRealizable { a: usize, b: usize, c: usize },
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}
