//! Extremal planar graph toolkit.
//!
//! Builds and certifies the explicit extremal constructions for planar
//! graphs avoiding short cycles, audits the supporting face-counting
//! inequalities on arbitrary plane graphs, and computes exact extremal
//! numbers `ex(n, H)` for small `n` by exhaustive isomorph-free search.

pub mod audit;
pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod embedding;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod patterns;
pub mod planarity;
pub mod reduce;
pub mod search;

pub use graph::{degree_profile, graph_stats, AbstractGraph, DegreeProfile, GraphStats};
pub use graph6::{read_graph6, write_graph6};
