//! Graph constructions, width measures, homomorphism and quantified colouring
//! engines, and the reductions between them, each checkable against a
//! brute-force oracle at small scale.

pub mod corpus;
pub mod dichotomy;
pub mod edp;
pub mod error;
pub mod format;
pub mod graph;
pub mod hom;
pub mod quantified;
pub mod reductions;
pub mod subgraph;
pub mod width;

pub use error::{Error, Result};
pub use graph::{ColourSet, Graph, Vertex};
