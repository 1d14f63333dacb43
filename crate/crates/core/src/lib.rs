//! Exact cops-and-robber analysis on oriented graphs.
//!
//! The crate covers four move regimes (strong, normal and weak cop models
//! on an oriented graph, plus the classical game on its underlying graph),
//! an exact attractor-based solver for each, three kinds of single-vertex
//! retracts, strong and weak t-subdivisions, instance generators, and a
//! harness that checks the known structural results over whole corpora.

pub mod error;
pub mod game;
pub mod generators;
pub mod graph;
pub mod retracts;
pub mod subdivisions;
pub mod verify;

pub use error::{Error, Result};
pub use game::{GameSpec, MoveModel, SolverConfig};
pub use graph::{GraphFile, OrientedGraph, UndirectedGraph, VertexId};
