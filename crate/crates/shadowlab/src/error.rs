use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("ratio undefined for empty family")]
    EmptyFamily,
    #[error("vertex {v} out of range [1, {n}]")]
    VertexOutOfRange { v: u32, n: u32 },
    #[error("{op} requires uniformity k >= {min}, got k = {k}")]
    UniformityTooSmall { op: &'static str, k: u32, min: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("Sperner hypothesis violated: m = {m} > C({a},{k}) = {max}")]
    SpernerHypothesis { m: u64, a: u64, k: u32, max: u64 },
    #[error("short-interval hypothesis violated: {0}")]
    ShortIntervalHypothesis(String),
    #[error("low-degree construction requires d < k (got d = {d}, k = {k})")]
    LowDegreeRange { d: u64, k: u32 },
    #[error("could not pack {s} disjoint perfect matchings into C([{n}],{k})")]
    MatchingPacking { k: u32, n: u32, s: u32 },
    #[error("shadow not complete after deleting matchings: facet {0} lost all supersets")]
    ShadowBroken(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
