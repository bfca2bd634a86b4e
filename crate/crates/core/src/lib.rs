//! Cut-rank width parameters, vertex-minors, and executable certificates for
//! the constructions that relate them.
//!
//! Graphs have at most 64 vertices; vertex sets are bitmasks. Every exact
//! solver is capped by [`SolverCaps`] and reports [`Error::Resource`] rather
//! than an approximation when a cap is exceeded.

pub mod bitset;
pub mod caps;
pub mod combinat;
pub mod error;
pub mod graph;
pub mod rank;
pub mod verify;
pub mod vm;
pub mod witnesses;

pub use bitset::VertexSet;
pub use caps::SolverCaps;
pub use error::{Error, Result};
pub use graph::Graph;
