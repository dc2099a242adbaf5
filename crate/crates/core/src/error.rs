use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge {0}-{1}")]
    UnknownEdge(usize, usize),
    #[error("invalid edge {0}-{1}: self-loop")]
    SelfLoop(usize, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("assignment does not match the edge set: {0}")]
    DomainMismatch(String),
    #[error("edge {0}-{1} has value {2} outside 0..={3}")]
    EdgeValue(usize, usize, u32, u32),
    #[error("vertex {0} has sum {1} exceeding k = {2}")]
    VertexSum(usize, u32, u32),
    #[error("fault set contains vertex {0} but the query is edges-only")]
    VertexInEdgeQuery(usize),
    #[error("enumeration budget exceeded: {needed} fault sets needed, budget {budget}; use verify or sample mode")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("no fault set destroys the structure")]
    NoPreclusionSet,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("star witness at vertex {0} is not a preclusion set")]
    StarWitness(usize),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
