use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {edge} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    /// `first` and `second` are the smallest vertices of two different components.
    #[error("graph is disconnected: vertex {first} and vertex {second} lie in different components")]
    Disconnected { first: usize, second: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge partition does not cover the edge set: {0}")]
    PartitionCoverage(String),
    #[error("grouping is not a partition of the block indices: {0}")]
    InvalidGrouping(String),
    /// A Θ*-class that the candidate partition splits across blocks.
    #[error("partition is not coarser than the Θ*-partition: Θ*-class {class:?} is split")]
    NotCoarser { class: Vec<usize> },
    #[error("orbits do not partition the vertex set: {0}")]
    OrbitCoverage(String),
    #[error("automorphism search exceeded the node limit of {limit}")]
    NodeLimitExceeded { limit: u64 },
    #[error("invalid tubulene ZT({n},{h}): need n >= 1 and h >= 2")]
    InvalidTubulene { n: usize, h: usize },
    #[error("structural automorphisms of ZT({n},{h}) are only constructed for odd n")]
    EvenLayerCount { n: usize, h: usize },
    #[error("constructed map is not an automorphism: {0}")]
    VerificationFailed(String),
}
