use num_bigint::BigInt;
use num_traits::Zero;

use crate::control::checking::ControllabilityReport;
use crate::control::matrix::ControlMatrix;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::spectra::EigenBasis;
use crate::threshold::{conjugate, DegreeSequence, ThresholdGraph};

/// Rank of the Kalman matrix [B | LB | ... | L^(k-1)B], computed exactly.
pub fn kalman_rank(l: &IntMatrix, b: &ControlMatrix) -> Result<usize> {
    if !l.is_square() {
        return Err(Error::NotSquare(l.rows(), l.cols()));
    }
    if b.k() != l.rows() {
        return Err(Error::DimensionMismatch(l.rows(), l.cols(), b.k(), b.p()));
    }
    let k = l.rows();
    let mut blocks = Vec::with_capacity(k);
    let mut cur = b.to_integer_scaled();
    for _ in 0..k {
        let next = l.matmul(&cur)?;
        blocks.push(cur);
        cur = next;
    }
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    Ok(IntMatrix::hstack(&refs)?.rank_exact())
}

/// Kalman decision: the pair is controllable iff the Kalman matrix has
/// full rank.
pub fn kalman_check(g: &ThresholdGraph, b: &ControlMatrix) -> Result<ControllabilityReport> {
    let rank = kalman_rank(g.laplacian(), b)?;
    Ok(ControllabilityReport {
        controllable: rank == g.k(),
        witness: None,
        failing_prefix: None,
    })
}

/// Eigenvector (PBH) decision: for every distinct eigenvalue, B^T restricted
/// to the eigenspace must have rank equal to the multiplicity. On failure
/// the report carries an exact integer witness: an eigenvector orthogonal to
/// every column of B.
pub fn pbh_check(g: &ThresholdGraph, b: &ControlMatrix) -> Result<ControllabilityReport> {
    if b.k() != g.k() {
        return Err(Error::DimensionMismatch(g.k(), g.k(), b.k(), b.p()));
    }
    let basis = EigenBasis::from_laplacian(g.laplacian())?;
    basis.verify(g.laplacian())?;
    let bt = b.to_integer_scaled().transpose();
    for (lambda, range) in basis.eigenvalue_classes() {
        let mu = range.len();
        let space = basis.eigenspace(lambda);
        let product = bt.matmul(&space)?; // p x mu
        if product.rank_exact() < mu {
            let kernel = product.kernel_basis();
            let c = kernel.first().expect("rank deficiency implies a kernel vector");
            let witness = space.mul_vec(c)?;
            debug_assert!(witness.iter().any(|x| !x.is_zero()));
            debug_assert!(
                g.laplacian()
                    .mul_vec(&witness)
                    .unwrap()
                    .iter()
                    .zip(&witness)
                    .all(|(img, w)| *img == BigInt::from(lambda) * w),
                "witness must stay an eigenvector"
            );
            return Ok(ControllabilityReport {
                controllable: false,
                witness: Some(witness),
                failing_prefix: None,
            });
        }
    }
    Ok(ControllabilityReport::controllable())
}

/// A cheap necessary condition: inside every class of equal-degree vertices,
/// the corresponding rows of B must have rank at least (class size - 1);
/// otherwise some twin-difference eigenvector is unreachable.
pub fn class_rank_floor_check(g: &ThresholdGraph, b: &ControlMatrix) -> Result<bool> {
    if b.k() != g.k() {
        return Err(Error::DimensionMismatch(g.k(), g.k(), b.k(), b.p()));
    }
    let b_int = b.to_integer_scaled();
    let all_cols: Vec<usize> = (0..b.p()).collect();
    for range in g.degrees().class_ranges() {
        let m = range.len();
        if m < 2 {
            continue;
        }
        let rows: Vec<usize> = range.collect();
        if b_int.submatrix(&rows, &all_cols).rank_exact() < m - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimum controller counts (binary, terminal) for the degree sequence:
/// the largest eigenvalue multiplicity, and the vertex count minus the
/// number of distinct degrees.
pub fn min_controllers(d: &DegreeSequence) -> (usize, usize) {
    if d.k() == 1 {
        return (1, 1);
    }
    let binary = conjugate(d).max_multiplicity();
    // Some degree repeats in every threshold graph on k >= 2 vertices, so
    // this is always at least 1.
    let terminal = d.k() - d.classes().len();
    (binary, terminal)
}
