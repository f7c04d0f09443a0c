//! Williams' small-cancellation groups `G_T` built from finite graphs, with
//! Dehn's algorithm, torsion orders, an explicit element coding, a checker
//! for extending partial maps to automorphisms, and the prime-divisibility
//! random graph.

pub mod coding;
pub mod error;
pub mod freegroup;
pub mod graph;
pub mod graphrel;
pub mod presentation;
pub mod primes;
pub mod randomgraph;
pub mod williams;

pub use coding::{CodingTable, PartialMap};
pub use error::{Error, Result};
pub use freegroup::{Letter, Word};
pub use graph::Graph;
pub use presentation::{Order, Presentation, RelatorSet};
pub use williams::{relators_from_graph, CanonicalAuto, GeneratorMap};
