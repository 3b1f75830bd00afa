//! Solvers for maximum uniquely restricted matchings.

pub mod cli;
pub mod error;
pub mod exact;
pub mod gadget;
pub mod graph;
pub mod linegraph;
pub mod report;
pub mod treewidth;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Matching};
