use crate::graph::{EdgeId, VertexId};
use crate::matroid::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("edge {0} is a self-loop")]
    SelfLoop(EdgeId),
    #[error("edge {0} has no weight")]
    MissingWeight(EdgeId),
    #[error("vertices {0} and {1} lie on the same side")]
    SameSide(VertexId, VertexId),
    #[error("edge set is not a matching: {0}")]
    NotAMatching(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("element {0} is outside the ground set")]
    UnknownElement(ElementId),
    #[error("element {0} has no weight")]
    MissingElementWeight(ElementId),
    #[error("set is dependent, cannot contract")]
    DependentContraction,
    #[error("the given set is not a basis")]
    NotABasis,
    #[error("element {0} already in the basis")]
    ElementInBasis(ElementId),
    #[error("weight arithmetic overflowed")]
    Overflow,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),
    #[error("{size} uncertain vertices exceed the exhaustive cut-covering limit {limit}")]
    ThresholdExceeded { size: usize, limit: usize },
    #[error("verification budget exceeded: {0} instantiations requested")]
    BudgetExceeded(u128),
    #[error("bundle does not fit the instance: {0}")]
    BundleMismatch(String),
    #[error("input too large for the brute-force oracle: {0}")]
    OracleTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
