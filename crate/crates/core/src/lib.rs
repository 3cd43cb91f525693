//! Exact Steiner distances and Steiner k-diameters of small simple graphs,
//! structural recognizers for small Steiner 3-diameters, and exhaustive
//! verification of Nordhaus-Gaddum type bounds.

pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod iso;
pub mod nordhaus_gaddum;
pub mod recognizers;
pub mod steiner;
pub mod structure;
pub mod verdict;

pub use error::{Error, Result};
pub use families::{generate, FamilySpec, H2Pattern};
pub use graph::{k_subsets, Edge, ExtLength, Graph, GraphBuilder, Vertex, VertexSet, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
