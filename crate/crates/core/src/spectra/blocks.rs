use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::spectra::basis::EigenBasis;
use crate::threshold::ThresholdGraph;

/// The verified block partition of an eigenbasis.
///
/// Rows split by degree class, columns by eigenvalue class (the kernel
/// column excluded), and the counts agree. One distinguished class -- the
/// one whose degree is d_{trace+1} -- carries zero-sum columns supported on
/// its own rows; every other off-diagonal block is constant 0 or -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub class_count: usize,
    /// 0-based index of the distinguished class.
    pub special_class: usize,
    pub row_classes: Vec<std::ops::Range<usize>>,
    pub col_classes: Vec<std::ops::Range<usize>>,
}

/// Checks the block structure of `basis` against the degree classes of `g`
/// and returns the partition; errors on any violated block claim.
pub fn block_structure(g: &ThresholdGraph, basis: &EigenBasis) -> Result<BlockStructure> {
    if g.k() < 2 {
        return Err(Error::Singleton);
    }
    let d = g.degrees();
    let row_classes = d.class_ranges();

    // Column classes over the nonzero eigenvalues only; the kernel column
    // has no degree-class counterpart.
    let mut col_classes: Vec<std::ops::Range<usize>> = Vec::new();
    let eigenvalues = basis.eigenvalues();
    for (j, &lam) in eigenvalues.iter().enumerate() {
        if lam == 0 {
            continue;
        }
        match col_classes.last_mut() {
            Some(range) if range.end == j && eigenvalues[j - 1] == lam => range.end = j + 1,
            _ => col_classes.push(j..j + 1),
        }
    }

    if row_classes.len() != col_classes.len() {
        return Err(Error::InvalidBasis(format!(
            "{} degree classes vs {} nonzero eigenvalue classes",
            row_classes.len(),
            col_classes.len()
        )));
    }

    let tau = d.trace();
    let special_value = d.values()[tau];
    let special_class = d
        .classes()
        .iter()
        .position(|&(value, _)| value == special_value)
        .expect("d_{trace+1} appears in its own class");

    let v = basis.vectors();
    let bad = |msg: String| Error::InvalidBasis(msg);
    for (ci, rows) in row_classes.iter().enumerate() {
        for (cj, cols) in col_classes.iter().enumerate() {
            let block: Vec<Vec<&BigInt>> = rows
                .clone()
                .map(|i| cols.clone().map(|j| &v[(i, j)]).collect())
                .collect();
            if cj == special_class {
                if ci == special_class {
                    // Each column of the distinguished diagonal block sums
                    // to zero: the eigenvectors live inside their class.
                    for (c, j) in cols.clone().enumerate() {
                        let sum: BigInt = block.iter().map(|row| row[c]).sum();
                        if !sum.is_zero() {
                            return Err(bad(format!("column {j} of the special block has nonzero sum")));
                        }
                    }
                } else if block.iter().flatten().any(|x| !x.is_zero()) {
                    return Err(bad(format!(
                        "class {ci} rows must vanish on the special columns"
                    )));
                }
            } else if ci != cj {
                let first = block[0][0];
                if !(first.is_zero() || *first == BigInt::from(-1))
                    || block.iter().flatten().any(|&x| x != first)
                {
                    return Err(bad(format!("block ({ci},{cj}) is not constant 0 or -1")));
                }
            }
        }
    }

    Ok(BlockStructure { class_count: row_classes.len(), special_class, row_classes, col_classes })
}
