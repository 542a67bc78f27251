use crate::model::{Axis, VertexId};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("two {axis} roads share offset {offset}")]
    DuplicateOffset { axis: Axis, offset: i64 },
    #[error("a network needs at least 2 {axis} roads, got {count}")]
    TooFewRoads { axis: Axis, count: usize },
    #[error("road with axis {found} supplied in the {expected} family")]
    AxisMismatch { expected: Axis, found: Axis },
    #[error("vertex {0} is outside the network")]
    VertexOutOfRange(VertexId),
    #[error("path is empty")]
    EmptyPath,
    #[error("path breaks at edge {index}: no directed edge from {from} to {to}")]
    BrokenEdge { index: usize, from: VertexId, to: VertexId },
    #[error("single-vertex paths have no orientation")]
    DegeneratePath,
    #[error("speed must be strictly positive")]
    NonPositiveSpeed,
    #[error("instance has {size} nodes; exact search is capped at {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("traffic configuration contains a turning vehicle (car {car})")]
    NotStraightLine { car: usize },
    #[error("selected subset is not collision-free")]
    InfeasibleSelection,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid reduction parameters: {0}")]
    InvalidParams(String),
    #[error("cannot place {count} detours between path positions {alpha} and {beta}")]
    NoRoom { alpha: usize, beta: usize, count: usize },
    #[error("detour template edge {from} -> {to} does not exist")]
    InvalidDirection { from: VertexId, to: VertexId },
    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
