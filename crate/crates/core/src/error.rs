use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Dynkin diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("vertex {vertex} out of range for rank {rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("vertex {0} is not a sink")]
    NotASink(usize),
    #[error("vertex {0} is not a source")]
    NotASource(usize),
    #[error("root index {index} out of range for ν = {nu}")]
    RootIndexOutOfRange { index: usize, nu: usize },
    #[error("representations are over different quivers or fields")]
    Mismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("class {0:?} is not in the catalog")]
    NotInCatalog(Vec<u32>),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("interpolation failed: {0}")]
    Interpolation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
