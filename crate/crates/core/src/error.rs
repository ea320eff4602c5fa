use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("a cycle needs at least 3 distinct vertices")]
    CycleTooShort,
    #[error("switching function covers {got} vertices, graph has {expected}")]
    SwitchingSizeMismatch { expected: usize, got: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is acyclic; girth is undefined")]
    AcyclicGraph,
    #[error("underlying graph is not a cycle")]
    NotACycle,
    #[error("underlying graphs differ")]
    UnderlyingMismatch,
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix entry {0} is not in {{-1, 0, 1}}")]
    InvalidEntry(i64),
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("rational value has zero denominator")]
    ZeroDenominator,
    #[error("invalid order {n}: {reason}")]
    InvalidOrder { n: usize, reason: &'static str },
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
