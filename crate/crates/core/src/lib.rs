//! Clique-destroying independent sets and the coloring bounds they imply.
//!
//! The crate enumerates maximum cliques exactly, groups them by their
//! intersection graph, and picks one vertex from each group's common core so
//! that the picks are independent and every maximum clique loses a vertex.
//! Around that construction sit exact solvers for χ, χ* and χ′, checkers for
//! the supporting clique-intersection inequalities, and a seeded campaign
//! harness that exercises all of them on generated graphs.

pub mod bitset;
pub mod campaign;
pub mod clique;
pub mod coloring;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod main_lemma;
pub mod rng;
pub mod transversal;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, Multigraph};
