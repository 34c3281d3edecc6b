//! Exact integer eigenvector bases for threshold Laplacians.
//!
//! The spectrum of a connected threshold graph is the conjugate of its
//! degree sequence, and an integer eigenvector basis can be read off the
//! canonical Laplacian with O(k^2) additions; this module builds and
//! verifies that basis and exposes its block structure.

mod basis;
mod blocks;

pub use basis::{laplacian_spectrum, EigenBasis};
pub use blocks::{block_structure, BlockStructure};
