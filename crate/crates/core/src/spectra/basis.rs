use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{dot, IntMatrix};
use crate::threshold::{canonical_laplacian_degrees, conjugate, DegreeSequence, ThresholdGraph};

/// An exact integer eigenvector basis of a canonical threshold Laplacian.
///
/// Column j is an eigenvector for `eigenvalues[j]`; the eigenvalue list is
/// the padded conjugate of the degree sequence, in nonincreasing order, and
/// the last column is the all-ones kernel vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenBasis {
    vectors: IntMatrix,
    eigenvalues: Vec<usize>,
}

impl EigenBasis {
    /// Runs the direct column-rewriting construction on a canonical
    /// threshold Laplacian.
    ///
    /// Starting from a copy of L, each column j >= 2 has its strictly-upper
    /// entries v replaced by -1 - v and its diagonal entry set to minus the
    /// sum of the rest of the column. That leaves exactly one zero column,
    /// at position trace+1; it is dropped and the all-ones column appended.
    /// The whole construction costs O(k^2) additions and no multiplication.
    pub fn from_laplacian(l: &IntMatrix) -> Result<Self> {
        let d = canonical_laplacian_degrees(l)?;
        let k = d.k();
        let mut v = l.clone();
        let mut additions = 0usize;
        for j in 1..k {
            for i in 0..j {
                let cur = std::mem::take(&mut v[(i, j)]);
                v[(i, j)] = -BigInt::from(1) - cur;
            }
            additions += j;
            let mut sum = BigInt::zero();
            for i in (0..k).filter(|&i| i != j) {
                sum += &v[(i, j)];
            }
            additions += k - 2;
            v[(j, j)] = -sum;
        }
        debug_assert_eq!(
            additions,
            k * (k - 1) / 2 + (k - 1) * (k.max(2) - 2),
            "the construction performs a fixed number of additions"
        );

        let zero_cols: Vec<usize> =
            (0..k).filter(|&j| (0..k).all(|i| v[(i, j)].is_zero())).collect();
        if zero_cols != [d.trace()] {
            return Err(Error::InvalidBasis(format!(
                "expected the single zero column at position {}, found {:?}",
                d.trace(),
                zero_cols
            )));
        }
        let kept: Vec<usize> = (0..k).filter(|&j| j != d.trace()).collect();
        let all = (0..k).collect::<Vec<_>>();
        let ones = IntMatrix::from_fn(k, 1, |_, _| BigInt::from(1));
        let vectors = IntMatrix::hstack(&[&v.submatrix(&all, &kept), &ones])?;
        let eigenvalues = conjugate(&d).values().to_vec();
        Ok(EigenBasis { vectors, eigenvalues })
    }

    /// Convenience form for an already-built graph.
    pub fn from_graph(g: &ThresholdGraph) -> Self {
        Self::from_laplacian(g.laplacian()).expect("canonical Laplacians always have a basis")
    }

    pub fn k(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn vectors(&self) -> &IntMatrix {
        &self.vectors
    }

    /// Eigenvalues in nonincreasing order, one per column.
    pub fn eigenvalues(&self) -> &[usize] {
        &self.eigenvalues
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.vectors.col(j)
    }

    /// Distinct eigenvalues with the column range each occupies.
    pub fn eigenvalue_classes(&self) -> Vec<(usize, std::ops::Range<usize>)> {
        let mut out: Vec<(usize, std::ops::Range<usize>)> = Vec::new();
        for (j, &lam) in self.eigenvalues.iter().enumerate() {
            match out.last_mut() {
                Some((value, range)) if *value == lam => range.end = j + 1,
                _ => out.push((lam, j..j + 1)),
            }
        }
        out
    }

    /// The columns spanning the eigenspace of `lambda`, as a k x mu matrix.
    pub fn eigenspace(&self, lambda: usize) -> IntMatrix {
        let cols: Vec<usize> = self
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|&(_, &lam)| lam == lambda)
            .map(|(j, _)| j)
            .collect();
        let rows: Vec<usize> = (0..self.k()).collect();
        self.vectors.submatrix(&rows, &cols)
    }

    /// Exact verification against a Laplacian: every column is a nonzero
    /// eigenvector for its listed eigenvalue and the columns are pairwise
    /// orthogonal (hence linearly independent).
    pub fn verify(&self, l: &IntMatrix) -> Result<()> {
        let k = self.k();
        if l.rows() != k || l.cols() != k || self.vectors.rows() != k || self.vectors.cols() != k {
            return Err(Error::DimensionMismatch(
                l.rows(),
                l.cols(),
                self.vectors.rows(),
                self.vectors.cols(),
            ));
        }
        for j in 0..k {
            let col = self.column(j);
            if col.iter().all(Zero::is_zero) {
                return Err(Error::InvalidBasis(format!("column {j} is zero")));
            }
            let image = l.mul_vec(&col)?;
            let lam = BigInt::from(self.eigenvalues[j]);
            if (0..k).any(|i| image[i] != &lam * &col[i]) {
                return Err(Error::InvalidBasis(format!(
                    "column {j} is not an eigenvector for {}",
                    self.eigenvalues[j]
                )));
            }
        }
        for a in 0..k {
            for b in a + 1..k {
                if !dot(&self.column(a), &self.column(b)).is_zero() {
                    return Err(Error::InvalidBasis(format!(
                        "columns {a} and {b} are not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Swaps the rows of two equal-degree vertices, producing the basis for
    /// the relabelled (identical) Laplacian. Errors if the degrees differ.
    pub fn swap_rows_of_equal_degree(
        &self,
        degrees: &DegreeSequence,
        i: usize,
        j: usize,
    ) -> Result<EigenBasis> {
        let k = self.k();
        if i >= k || j >= k {
            return Err(Error::IndexOutOfRange(i.max(j), k));
        }
        if degrees.values()[i] != degrees.values()[j] {
            return Err(Error::DegreeMismatch(i, j));
        }
        let mut vectors = self.vectors.clone();
        for c in 0..k {
            let a = vectors[(i, c)].clone();
            let b = std::mem::replace(&mut vectors[(j, c)], a);
            vectors[(i, c)] = b;
        }
        Ok(EigenBasis { vectors, eigenvalues: self.eigenvalues.clone() })
    }
}

/// The Laplacian spectrum of a threshold graph: the conjugate degree
/// sequence, nonincreasing, zero included.
pub fn laplacian_spectrum(d: &DegreeSequence) -> Vec<usize> {
    conjugate(d).values().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntPolynomial;
    use crate::threshold::ConstructionString;

    fn basis_of(text: &str) -> (ThresholdGraph, EigenBasis) {
        let g = ThresholdGraph::from_string(&ConstructionString::parse(text).unwrap());
        let b = EigenBasis::from_graph(&g);
        (g, b)
    }

    fn columns(b: &EigenBasis) -> Vec<Vec<i64>> {
        let m = b.vectors().to_i64().unwrap();
        (0..b.k()).map(|j| (0..b.k()).map(|i| m[i][j]).collect()).collect()
    }

    #[test]
    fn k2_basis() {
        let (g, b) = basis_of("1");
        assert_eq!(b.eigenvalues(), &[2, 0]);
        assert_eq!(columns(&b), vec![vec![1, -1], vec![1, 1]]);
        b.verify(g.laplacian()).unwrap();
    }

    #[test]
    fn star_basis() {
        let (g, b) = basis_of("001");
        assert_eq!(b.eigenvalues(), &[4, 1, 1, 0]);
        assert_eq!(
            columns(&b),
            vec![
                vec![3, -1, -1, -1],
                vec![0, -1, 1, 0],
                vec![0, -1, -1, 2],
                vec![1, 1, 1, 1],
            ]
        );
        b.verify(g.laplacian()).unwrap();
    }

    #[test]
    fn five_vertex_basis() {
        let (g, b) = basis_of("0011");
        assert_eq!(g.degrees().values(), &[4, 4, 2, 2, 2]);
        assert_eq!(b.eigenvalues(), &[5, 5, 2, 2, 0]);
        assert_eq!(
            columns(&b),
            vec![
                vec![4, -1, -1, -1, -1],
                vec![0, 3, -1, -1, -1],
                vec![0, 0, -1, 1, 0],
                vec![0, 0, -1, -1, 2],
                vec![1, 1, 1, 1, 1],
            ]
        );
        b.verify(g.laplacian()).unwrap();
    }

    #[test]
    fn nine_vertex_basis() {
        let (g, b) = basis_of("00110001");
        assert_eq!(g.degrees().values(), &[8, 5, 5, 3, 3, 3, 1, 1, 1]);
        assert_eq!(b.eigenvalues(), &[9, 6, 6, 3, 3, 1, 1, 1, 0]);
        assert_eq!(
            columns(&b),
            vec![
                vec![8, -1, -1, -1, -1, -1, -1, -1, -1],
                vec![0, 4, -1, -1, -1, -1, 0, 0, 0],
                vec![0, 0, 3, -1, -1, -1, 0, 0, 0],
                vec![0, 0, 0, -1, 1, 0, 0, 0, 0],
                vec![0, 0, 0, -1, -1, 2, 0, 0, 0],
                vec![0, -1, -1, -1, -1, -1, 5, 0, 0],
                vec![0, -1, -1, -1, -1, -1, -1, 6, 0],
                vec![0, -1, -1, -1, -1, -1, -1, -1, 7],
                vec![1, 1, 1, 1, 1, 1, 1, 1, 1],
            ]
        );
        b.verify(g.laplacian()).unwrap();
    }

    #[test]
    fn eleven_vertex_basis() {
        let (g, b) = basis_of("0011000101");
        assert_eq!(b.eigenvalues(), &[11, 10, 7, 7, 4, 4, 2, 2, 2, 1, 0]);
        assert_eq!(
            columns(&b),
            vec![
                vec![10, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
                vec![0, 8, -1, -1, -1, -1, -1, -1, -1, -1, 0],
                vec![0, 0, 4, -1, -1, -1, -1, 0, 0, 0, 0],
                vec![0, 0, 0, 3, -1, -1, -1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, -1, -1, 2, 0, 0, 0, 0],
                vec![0, 0, -1, -1, -1, -1, -1, 5, 0, 0, 0],
                vec![0, 0, -1, -1, -1, -1, -1, -1, 6, 0, 0],
                vec![0, 0, -1, -1, -1, -1, -1, -1, -1, 7, 0],
                vec![0, -1, -1, -1, -1, -1, -1, -1, -1, -1, 9],
                vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            ]
        );
        b.verify(g.laplacian()).unwrap();
    }

    #[test]
    fn singleton_basis() {
        let b = EigenBasis::from_graph(&ThresholdGraph::singleton());
        assert_eq!(b.eigenvalues(), &[0]);
        assert_eq!(columns(&b), vec![vec![1]]);
    }

    #[test]
    fn basis_verifies_and_matches_char_poly_exhaustively() {
        for k in 2..=9 {
            for s in ConstructionString::enumerate_all(k) {
                let g = ThresholdGraph::from_string(&s);
                let b = EigenBasis::from_graph(&g);
                b.verify(g.laplacian()).unwrap();
                // The characteristic polynomial must be the product of
                // (x - lambda) over the listed eigenvalues.
                let mut expected = IntPolynomial::constant(1);
                for &lam in b.eigenvalues() {
                    expected = expected.mul(&IntPolynomial::from_i64(&[-(lam as i64), 1]));
                }
                assert_eq!(g.laplacian().char_poly().unwrap(), expected, "{s}");
            }
        }
    }

    #[test]
    fn spectrum_is_the_padded_conjugate() {
        let (g, b) = basis_of("0011000101");
        assert_eq!(laplacian_spectrum(g.degrees()), b.eigenvalues());
    }

    #[test]
    fn eigenvalue_classes_and_eigenspace() {
        let (_, b) = basis_of("0011000101");
        let classes = b.eigenvalue_classes();
        assert_eq!(
            classes,
            vec![(11, 0..1), (10, 1..2), (7, 2..4), (4, 4..6), (2, 6..9), (1, 9..10), (0, 10..11)]
        );
        let e2 = b.eigenspace(2);
        assert_eq!(e2.cols(), 3);
        assert_eq!(e2.rows(), 11);
    }

    #[test]
    fn swapping_equal_degree_rows_keeps_a_valid_basis() {
        let (g, b) = basis_of("0011000101");
        // Vertices 5 and 6 (0-based 4 and 5) both have degree 4.
        let swapped = b.swap_rows_of_equal_degree(g.degrees(), 4, 5).unwrap();
        swapped.verify(g.laplacian()).unwrap();
        assert_ne!(swapped, b);

        // Degrees 10 and 9 differ.
        assert_eq!(
            b.swap_rows_of_equal_degree(g.degrees(), 0, 1).unwrap_err(),
            Error::DegreeMismatch(0, 1)
        );
        assert!(b.swap_rows_of_equal_degree(g.degrees(), 0, 11).is_err());
    }

    #[test]
    fn rejects_non_canonical_input() {
        let p4 = IntMatrix::from_rows(&[
            vec![2, -1, -1, 0],
            vec![-1, 2, 0, -1],
            vec![-1, 0, 1, 0],
            vec![0, -1, 0, 1],
        ]);
        assert!(EigenBasis::from_laplacian(&p4).is_err());
    }
}
