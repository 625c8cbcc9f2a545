//! Exact solvers and bound audits for graph width parameters.
//!
//! The crate computes balanced separator numbers, treewidth, pathwidth,
//! bandwidth, and cycle rank exactly on small graphs, builds rankings from
//! balanced separators, and checks the inequalities tying these parameters
//! together. Closed forms for the separator recurrence are evaluated in exact
//! integer arithmetic and audited against brute-force scans.

pub mod cli;
pub mod closed_forms;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod limits;
pub mod separators;
pub mod width;

pub use error::{Result, WidthError};
pub use graph::{Graph, VertexSet};
pub use limits::Caps;
