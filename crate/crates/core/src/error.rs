use alloc::string::String;

use crate::game::Role;
use crate::vertex_set::VertexSet;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph of order {order} exceeds the solver capacity of {cap} vertices")]
    Capacity { order: usize, cap: usize },

    #[error("vertex {0} is isolated; no total dominating set exists")]
    IsolatedVertex(usize),

    #[error("vertex {0} is not a member of the given set")]
    NotInSet(usize),

    #[error("the set {0} is not a total dominating set")]
    NotTotalDominating(VertexSet),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("{role} policy made an illegal move {vertex} (played {played}, dominated {dominated})")]
    IllegalMove { role: Role, vertex: usize, played: VertexSet, dominated: VertexSet },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("order {order} outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
}
