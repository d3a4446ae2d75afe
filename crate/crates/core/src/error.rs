use thiserror::Error;

/// Errors raised while constructing or transforming a [`crate::DiGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    BadId { id: usize, n: usize },
    #[error("edge ({tail}, {head}) has zero capacity")]
    ZeroCap { tail: usize, head: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge ({tail}, {head}) without merge_parallel")]
    DuplicateEdge { tail: usize, head: usize },
    #[error("vertex {0} has zero weight")]
    ZeroWeight(usize),
    #[error("weight vector has {got} entries, graph has {n} vertices")]
    WeightCount { got: usize, n: usize },
    #[error("root {0} is inside the contracted set")]
    RootInS(usize),
    #[error("vertex {0} is the root")]
    VIsRoot(usize),
    #[error("declared capacity bound {declared} is below the largest capacity {max_cap}")]
    CapBound { declared: u64, max_cap: u64 },
}

/// Errors raised by the connectivity algorithms and oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgoError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("source and sink are the same vertex {0}")]
    SameVertex(usize),
    #[error("graph has {0} vertices, need at least 2")]
    TooSmall(usize),
    #[error("graph has {n} vertices, oracle supports at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("bad sink-size range [{k1}, {k2}]")]
    BadRange { k1: u64, k2: u64 },
    #[error("invalid parameter: {0}")]
    BadParams(String),
}
