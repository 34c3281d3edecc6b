use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// What shape of control matrix a caller promises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ControlKind {
    /// Arbitrary rational entries.
    General,
    /// Entries in {0, 1}: controller c drives every vertex with B[v][c] = 1.
    Binary,
    /// Exactly one nonzero entry per column: each controller drives one vertex.
    Terminal,
}

/// A k x p control matrix with exact rational entries; the promised kind is
/// validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlMatrix {
    kind: ControlKind,
    k: usize,
    p: usize,
    entries: Vec<BigRational>,
}

impl ControlMatrix {
    pub fn new(kind: ControlKind, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = rows.len();
        let p = rows.first().map_or(0, Vec::len);
        if k == 0 || p == 0 {
            return Err(Error::BadControlMatrix("needs at least one row and one column".into()));
        }
        if rows.iter().any(|r| r.len() != p) {
            return Err(Error::BadControlMatrix("ragged rows".into()));
        }
        let entries: Vec<BigRational> = rows.into_iter().flatten().collect();
        let m = ControlMatrix { kind, k, p, entries };
        m.validate_kind()?;
        Ok(m)
    }

    fn validate_kind(&self) -> Result<()> {
        match self.kind {
            ControlKind::General => Ok(()),
            ControlKind::Binary => {
                if self.entries.iter().all(|x| x.is_zero() || x.is_one()) {
                    Ok(())
                } else {
                    Err(Error::BadControlMatrix("binary entries must be 0 or 1".into()))
                }
            }
            ControlKind::Terminal => {
                for j in 0..self.p {
                    let nonzero = (0..self.k).filter(|&i| !self[(i, j)].is_zero()).count();
                    if nonzero != 1 {
                        return Err(Error::BadControlMatrix(format!(
                            "terminal column {j} has {nonzero} nonzero entries"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    /// A binary matrix from the driven vertex sets of its columns.
    pub fn binary_from_columns(k: usize, columns: &[Vec<usize>]) -> Result<Self> {
        let mut rows = vec![vec![BigRational::zero(); columns.len()]; k];
        for (j, col) in columns.iter().enumerate() {
            for &i in col {
                if i >= k {
                    return Err(Error::IndexOutOfRange(i, k));
                }
                rows[i][j] = BigRational::one();
            }
        }
        ControlMatrix::new(ControlKind::Binary, rows)
    }

    /// A terminal matrix driving one listed vertex per column.
    pub fn terminal_from_vertices(k: usize, vertices: &[usize]) -> Result<Self> {
        let mut rows = vec![vec![BigRational::zero(); vertices.len()]; k];
        for (j, &i) in vertices.iter().enumerate() {
            if i >= k {
                return Err(Error::IndexOutOfRange(i, k));
            }
            rows[i][j] = BigRational::one();
        }
        ControlMatrix::new(ControlKind::Terminal, rows)
    }

    pub fn kind(&self) -> ControlKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.k).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.k).map(|i| (0..self.p).map(|j| self[(i, j)].clone()).collect()).collect()
    }

    /// The rows in `range`, as a General-kind matrix (the restriction of a
    /// control matrix to a subgraph block).
    pub fn restrict_rows(&self, range: std::ops::Range<usize>) -> Result<ControlMatrix> {
        if range.end > self.k || range.is_empty() {
            return Err(Error::IndexOutOfRange(range.end, self.k));
        }
        let rows = range.map(|i| (0..self.p).map(|j| self[(i, j)].clone()).collect()).collect();
        ControlMatrix::new(ControlKind::General, rows)
    }

    /// Clears denominators by the global lcm, which never changes any rank
    /// computed from the matrix.
    pub fn to_integer_scaled(&self) -> IntMatrix {
        let lcm = self.entries.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        IntMatrix::from_fn(self.k, self.p, |i, j| {
            let x = &self[(i, j)];
            x.numer() * (&lcm / x.denom())
        })
    }

    /// Column sums, used for the kernel-mode (all-ones eigenvector) test.
    pub fn column_sums(&self) -> Vec<BigRational> {
        (0..self.p).map(|j| (0..self.k).map(|i| self[(i, j)].clone()).sum()).collect()
    }
}

impl std::ops::Index<(usize, usize)> for ControlMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.entries[i * self.p + j]
    }
}
