use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: u32, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("graph is disconnected: no path from {0} to {1}")]
    Disconnected(u32, u32),
    #[error("graph is acyclic")]
    Acyclic,
    #[error("not a path: {0:?}")]
    NotAPath(Vec<u32>),
    #[error("{0}-path {1:?} lies in {2} girth cycles, expected 2")]
    PathCoverage(usize, Vec<u32>, usize),
    #[error("contradictory classification input: {0}")]
    Contradictory(String),
    #[error("invalid orientation assignment: {0}")]
    InvalidAssignment(String),
    #[error("face coverage violated on edge ({0}, {1}): {2} face slots")]
    FaceCoverage(u32, u32, usize),
    #[error("generator {0} is not a group element")]
    UnknownGenerator(usize),
    #[error("regular subgroup search at index {0} is not supported")]
    UnsupportedIndex(u64),
    #[error("fixture: {0}")]
    Fixture(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}
