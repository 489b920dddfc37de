//! Graph search orderings that linearly extend a partial order.
//!
//! Given a connected graph `G` and a partial order `π` on its vertices, the
//! partial search order problem asks for a search ordering of `G` (Generic
//! Search, LBFS, MCS, ...) that is a linear extension of `π`. This crate
//! provides:
//!
//! * the label search engine with tie-break orderings ([`search`]),
//! * a greedy solver for Generic Search ([`generic`]),
//! * the one-before-all ordering solver ([`oba`]),
//! * an LBFS solver on chordal bipartite graphs ([`chordal_bipartite`]),
//! * MCS and LBFS solvers on split graphs ([`split`]),
//! * encodings of the end-vertex and search tree problems ([`reductions`]),
//! * exhaustive deciders used for differential testing ([`oracle`]).
//!
//! Vertices are dense ids `0..n` in order of first appearance in the input.
//! Every "pick any" choice in the solvers resolves to the smallest id.

pub mod chordal_bipartite;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod generic;
pub mod graph;
pub mod oba;
pub mod oracle;
pub mod order;
pub mod ordering;
pub mod reductions;
pub mod search;
pub mod solution;
pub mod split;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use oba::ObaInstance;
pub use order::PartialOrder;
pub use ordering::Ordering;
pub use search::Search;
pub use solution::{Infeasible, Solution};
