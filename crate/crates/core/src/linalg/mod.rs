//! Exact integer linear algebra plus a small float eigensolver.
//!
//! Everything rank- or polynomial-shaped here is exact: ranks come from
//! fraction-free elimination, characteristic polynomials from an exact trace
//! recurrence, and the squarefree test from an integer pseudo-remainder
//! sequence. The only floating-point routine is the Jacobi eigensolver, used
//! where numerics are explicitly wanted.

mod eigen;
mod matrix;
mod poly;

pub use eigen::{eig_sym_float, eig_sym_float_default, eig_sym_float_with_vectors};
pub use matrix::{dot, mat_mul, IntMatrix};
pub use poly::IntPolynomial;
