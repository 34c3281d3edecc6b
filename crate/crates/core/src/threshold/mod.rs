//! Threshold graphs: degree sequences, construction strings, and canonical
//! Laplacians.
//!
//! A connected threshold graph on k vertices is described by a binary string
//! of k-1 symbols ending in 1: reading left to right, 0 adds an isolated
//! vertex and 1 adds a dominating one. Vertices are kept in canonical order
//! (nonincreasing degree), which makes the Laplacian a function of the degree
//! sequence alone.

mod graph;
mod seq;
mod string;

pub use graph::{
    canonical_laplacian_degrees, string_from_degrees, subgraph_positions, ThresholdGraph,
};
pub use seq::{
    conjugate, is_graphical, is_threshold, satisfies_dominance_condition, trace_of,
    ConjugateSequence, DegreeSequence,
};
pub use string::{
    enclosing_prefix_len, essential_substrings, successions, ConstructionString, Succession,
};
