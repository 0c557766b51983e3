//! A structural graph-theory toolkit for small graphs: forbidden-induced-
//! subgraph detection with witnesses, homogeneous sets and the Gallai module
//! partition, exact coloring and cliques, certificate-producing classifiers
//! for (bull, house)-free and (bull, P5)-free graphs, exhaustive enumeration
//! of k-critical class members, and perfect-divisibility checks.
//!
//! Everything is exact and deterministic; the intended scale is exhaustive
//! verification over all small graphs rather than performance on large ones.

pub mod canon;
pub mod coloring;
pub mod critical;
pub mod divisibility;
pub mod generate;
pub mod graph;
pub mod io;
pub mod modular;
pub mod patterns;
pub mod structure;

pub use graph::{Graph, GraphError, VertexSet};
pub use patterns::{Embedding, PatternKind};
