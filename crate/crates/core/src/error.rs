use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {0} does not exist in the host graph")]
    UnknownEdge(EdgeId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("edge set is not a pseudotree")]
    NotPseudotree,
    #[error("invalid flip: {0}")]
    InvalidFlip(String),
    #[error("trees belong to different host graphs")]
    HostMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration exceeded the cap of {0} spanning trees")]
    CapExceeded(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid NCL instance: {0}")]
    InvalidNcl(String),
    #[error("reduction invariant violated: {0}")]
    Reduction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
