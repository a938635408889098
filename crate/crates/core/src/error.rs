use crate::graph::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at node {node}")]
    SelfLoop { node: NodeId },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: NodeId, v: NodeId },
    #[error("edge {u}-{v} has a non-positive weight")]
    NonPositiveWeight { u: NodeId, v: NodeId },
    #[error("node {node} out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: NodeId, node_count: usize },
    #[error("threshold fraction must lie in (0, 1]")]
    InvalidFraction,
    #[error("ceiling thresholds are only defined for unit-weight graphs")]
    CeilingRequiresUnitWeights,
    #[error("fault tolerance m must be at least 1")]
    InvalidFaultTolerance,
    #[error("no connected dominating solution exists: the graph is disconnected or has fewer than 2 nodes")]
    InfeasibleInstance,
    #[error("approximation bound is undefined on an edgeless graph")]
    EdgelessGraph,
    #[error("instance has {size} nodes, above the exhaustive limit of {limit}; use sampling")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("node {node} has degree {degree}, above the enumeration limit of {limit}")]
    DegreeLimitExceeded { node: NodeId, degree: usize, limit: usize },
    #[error("node set does not induce a connected subgraph")]
    DisconnectedSubset,
    #[error("greedy run did not reach the feasibility target")]
    InfeasibleRun,
}
