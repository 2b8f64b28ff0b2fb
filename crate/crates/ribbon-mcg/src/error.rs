use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("invalid slide: {0}")]
    InvalidSlide(String),
    #[error("slide would cross a cilium: {0}")]
    CiliumCrossing(String),
    #[error("not a face path: {0}")]
    NotFacePath(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("operator is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
