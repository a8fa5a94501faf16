use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised by graph construction, the rewrite rules and the generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(VertexId, VertexId),
    #[error("vertex {0} is not live")]
    DeadVertex(VertexId),
    #[error("vertex {vertex} has degree {degree}, expected 6")]
    NotACandidate { vertex: VertexId, degree: usize },
    #[error("extended wheel graphs need k >= 3, got {0}")]
    WheelTooSmall(usize),
    #[error("no optimal 1-planar graph has {0} vertices (none exist for n < 8 or n = 9)")]
    UnreachableSize(usize),
    #[error("enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationRange { n: usize, max: usize },
    #[error("invalid expansion site: {0}")]
    InvalidSite(&'static str),
    #[error("no valid 2-switch found after {0} attempts")]
    NoSwitch(usize),
    #[error("trace replay failed: {0}")]
    Replay(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
