//! Greedy list coloring of the square of a sparse binomial random graph.
//!
//! The crate samples `G(n, c/n)`, squares it, splits the vertices by degree
//! into high-degree vertices, their neighbors and the rest, and list-colors
//! the square in that order, finishing the sparse remainder along a
//! degeneracy order. Around that pipeline sit exact small-instance oracles
//! (chromatic number, choosability, densest subgraph) and checkers that
//! measure the structural facts the coloring bound depends on.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod coloring;
pub mod graph;
pub mod harness;
pub mod params;
pub mod rng;
pub mod verify;

pub use graph::{square, Graph};
