use crate::error::{Error, Result};
use crate::linalg::matrix::IntMatrix;

/// Eigenvalues of a symmetric integer matrix, ascending, by cyclic Jacobi
/// rotations on a float copy. Sweeps stop once the off-diagonal Frobenius
/// norm falls below `tol` (default 1e-10 via [`eig_sym_float_default`]).
pub fn eig_sym_float(m: &IntMatrix, tol: f64) -> Result<Vec<f64>> {
    Ok(jacobi(m, tol)?.0)
}

/// [`eig_sym_float`] with the default tolerance.
pub fn eig_sym_float_default(m: &IntMatrix) -> Result<Vec<f64>> {
    eig_sym_float(m, 1e-10)
}

/// Eigenvalues (ascending) and matching orthonormal eigenvectors.
pub fn eig_sym_float_with_vectors(m: &IntMatrix, tol: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    jacobi(m, tol)
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

fn jacobi(m: &IntMatrix, tol: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    for i in 0..m.rows() {
        for j in 0..i {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let n = m.rows();
    let mut a = m.to_f64();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    if n > 1 {
        let mut sweeps = 0;
        while off_norm(&a) > tol {
            for p in 0..n - 1 {
                for q in p + 1..n {
                    if a[p][q].abs() <= f64::EPSILON * 1e-2 {
                        continue;
                    }
                    // Classical 2x2 symmetric Schur rotation.
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                    for row in v.iter_mut() {
                        let (vp, vq) = (row[p], row[q]);
                        row[p] = c * vp - s * vq;
                        row[q] = s * vp + c * vq;
                    }
                }
            }
            sweeps += 1;
            assert!(sweeps < 100, "Jacobi iteration failed to converge");
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());
    let eigenvalues = order.iter().map(|&i| a[i][i]).collect();
    let eigenvectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row][col]).collect())
        .collect();
    Ok((eigenvalues, eigenvectors))
}
