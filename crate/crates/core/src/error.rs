use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("loop at vertex `{0}`")]
    Loop(String),

    #[error("anti-parallel arcs between `{0}` and `{1}`")]
    AntiParallel(String, String),

    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),

    #[error("unknown vertex name `{0}`")]
    UnknownVertex(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("no winning strategy for {k} cop(s)")]
    NoStrategy { k: usize },

    #[error("rule violation: {0}")]
    RuleViolation(String),

    #[error("witness does not certify a retract: {0}")]
    WitnessInvalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
