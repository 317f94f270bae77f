//! Homomorphism indistinguishability toolkit: exact homomorphism counting,
//! oddomorphisms, CFI pairs, reduction constructions, graph-class predicates
//! and series-parallel contractor algebra for small graphs.

pub mod bilabelled;
pub mod cfi;
pub mod classes;
pub mod corpus;
pub mod error;
pub mod family;
pub mod gf2;
pub mod graph;
pub mod hom;
pub mod oddo;
pub mod reductions;
pub mod suite;
pub mod util;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};

pub(crate) fn serde_graph6<S: serde::Serializer>(
    g: &Graph,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&graph::encode_graph6(g))
}
