//! Exact solvers for three pursuit games on finite graphs: Cops and
//! Cheating Robot, Surrounding Cops and Robbers, and Bodyguards and
//! Presidents.

pub mod cache;
pub mod engine;
pub mod fixtures;
pub mod graph;
pub mod multiset;
pub mod psi;
pub mod suite;
pub mod solver;

pub use graph::{Graph, GraphError, GraphFamily, ProductKind, Vertex};
