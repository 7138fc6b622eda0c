use thiserror::Error;

/// Errors raised while constructing or querying graphs.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {0} is out of range (n = {1})")]
    UnknownVertex(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("graph is not connected{}", if *.directed { " (strongly)" } else { "" })]
    Disconnected { directed: bool },
    #[error("vertices {0} and {1} are not connected")]
    DisconnectedPair(usize, usize),
    #[error("malformed graph input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Errors from the structural-parameter solvers.
#[derive(Debug, Error)]
pub enum ParamError {
    #[error("search node budget of {0} exceeded")]
    Budget(usize),
    #[error("{0} certificate failed verification: {1}")]
    BadCertificate(&'static str, String),
    #[error("graph too large for the exact solver (n = {0}, max {1})")]
    TooLarge(usize, usize),
    #[error("exact parameter solvers require an undirected graph")]
    Directed,
}

/// Errors from the game engine.
#[derive(Debug, Error)]
pub enum GameError {
    #[error("invalid rule set: {0}")]
    InvalidSpec(String),
    #[error("state-space budget of {0} states exceeded (needed at least {1})")]
    Budget(usize, usize),
    #[error("graph must be connected{} for the solver", if *.directed { " (strongly)" } else { "" })]
    Disconnected { directed: bool },
    #[error("malformed game state: {0}")]
    MalformedState(String),
    #[error("rule set is for a {expected} graph but the graph is {got}")]
    DirectionMismatch { expected: &'static str, got: &'static str },
    #[error("no winning region: {0}")]
    NotCopWin(String),
    #[error("policy returned an illegal move at round {round}: {detail}")]
    IllegalMove { round: usize, detail: String },
    #[error("cop count {0} exceeds the supported maximum {1}")]
    TooManyCops(usize, usize),
}

/// Errors from the kernelization pipelines.
#[derive(Debug, Error)]
pub enum KernelError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("cover kind {got} cannot drive the {pipeline} pipeline")]
    CoverKindMismatch { got: &'static str, pipeline: &'static str },
    #[error("{0}")]
    Unsupported(String),
}

/// Errors from the bound planners.
#[derive(Debug, Error)]
pub enum BoundError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("path is not isometric: {0}")]
    NotIsometric(String),
    #[error("endgame precondition violated: {0}")]
    Precondition(String),
    #[error("residual structure check failed: {0}; this contradicts the planner's guarantees")]
    ResidualStructure(String),
}

/// Errors from the instance generators.
#[derive(Debug, Error)]
pub enum GenError {
    #[error("infeasible construction: {0}")]
    Infeasible(String),
    #[error("retry budget exhausted after {0} restarts")]
    RetriesExhausted(usize),
    #[error("invalid generator parameters: {0}")]
    BadParams(String),
}
