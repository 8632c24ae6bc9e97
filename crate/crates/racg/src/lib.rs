//! Exact computation in right-angled Coxeter groups.
//!
//! A right-angled Coxeter group is presented by a finite simple graph: one
//! involutive generator per vertex, with two generators commuting exactly when
//! their vertices are adjacent. Everything here is exact and deterministic:
//! canonical normal forms for the word problem, reflection and centralizer
//! algorithms, strong-rigidity certificates with machine-checkable witnesses,
//! generators for the graph families the rigidity theory feeds on, and
//! finite-scale probes (Ehrenfeucht-Fraïssé games, a graph-into-group
//! encoding, a first-order axiom checker) for the model-theoretic side.

pub mod aec;
pub mod bruteforce;
pub mod error;
pub mod families;
pub mod graph;
pub mod logic;
pub mod reflect;
pub mod rigidity;
pub mod suite;
pub mod words;

pub use error::Error;
pub use graph::{CoxeterGraph, VertexId, VertexSet};
pub use words::GroupElement;
