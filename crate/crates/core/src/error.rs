use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised when an input does not meet a solver's preconditions.
///
/// Infeasibility of a well-formed instance is not an error; see
/// [`Solution`](crate::Solution).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected: vertex {unreached} is unreachable")]
    Disconnected { unreached: Vertex },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not chordal bipartite (induced cycle of length {cycle_len})")]
    NotChordalBipartite { cycle_len: usize },
    #[error("chordal bipartite check skipped: {n} vertices exceed the cap of {cap}")]
    ClassUnverified { n: usize, cap: usize },
    #[error("relation contains a cycle through {0:?}")]
    Cycle(Vec<Vertex>),
    #[error("expected {expected} elements, found {found}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("sequence is not a permutation: {0}")]
    NotPermutation(String),
    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("vertex {vertex} has no earlier neighbor in the ordering")]
    NotConnectedSearch { vertex: Vertex },
    #[error("instance of size {n} exceeds the exhaustive-search cap of {cap}")]
    SizeGuard { n: usize, cap: usize },
    #[error("invalid one-before-all instance: {0}")]
    InvalidObaInstance(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
