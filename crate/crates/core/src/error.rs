use crate::hypergraph::{EdgeId, VertexId};
use alloc::string::String;

/// Errors produced by hypergraph construction and the algorithms over it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("uniformity q must be at least 2, got {0}")]
    InvalidUniformity(usize),
    #[error("{edges} edges but {weights} weights")]
    WeightCountMismatch { edges: usize, weights: usize },
    #[error("edge {edge} lists {listed} vertices ({distinct} distinct), expected {q} distinct")]
    NonUniformEdge {
        edge: EdgeId,
        listed: usize,
        distinct: usize,
        q: usize,
    },
    #[error("edge {edge} references vertex {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edge {edge} has negative weight {weight}")]
    NegativeWeight { edge: EdgeId, weight: f64 },
    #[error("edge {edge} has non-finite weight")]
    NonFiniteWeight { edge: EdgeId },
    #[error("{labels} labels for {edges} edges")]
    LabelCountMismatch { edges: usize, labels: usize },
    #[error("duplicate edge label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge subset is empty")]
    EmptySubset,
    #[error("removed vertex {0} is not on the vertex side of the graph")]
    RemovedVertexNotInGraph(VertexId),
    #[error("subset of size {size} exceeds the exhaustive oracle cap {cap}")]
    SubsetTooLargeForExhaustiveOracle { size: usize, cap: usize },
    #[error("edge {0} is already in the subset")]
    EdgeAlreadyInSubset(EdgeId),
    #[error("edge {0} is not in the forest")]
    EdgeNotInForest(EdgeId),
    #[error("edge set is not independent")]
    NotIndependent,
    #[error("edge {edge} is a link of {candidates} components, expected exactly one")]
    LinkAmbiguity { edge: EdgeId, candidates: usize },
    #[error("components have not been computed for this skeleton")]
    ComponentsNotComputed,
    #[error("invalid flow network: {0}")]
    InvalidFlowNetwork(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
