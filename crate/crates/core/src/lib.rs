//! Banner complexes, banner numbers and the vertex connectivity of graphs of
//! simplicial pseudomanifolds.

pub mod banner;
pub mod complex;
pub mod error;
pub mod generators;
pub mod graph;
pub mod manifold;
pub mod verify;

pub use complex::{FVector, Face, SimplicialComplex, VertexId};
pub use error::{Error, Result};
