//! Exact spectral analysis and controllability tests for threshold graphs.
//!
//! Everything decision-making runs in exact integer or rational arithmetic:
//! Laplacians, their integer eigenvector bases, Kalman/PBH/local rank tests,
//! and controller design. Floating point appears only in the symmetric
//! eigensolver used for numeric cross-checks (interlacing, eigenvector
//! entries), never to decide controllability.

pub mod antiregular;
pub mod control;
pub mod error;
pub mod json;
pub mod linalg;
pub mod spectra;
pub mod sweep;
pub mod threshold;

pub use error::{Error, Result};
