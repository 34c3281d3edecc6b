use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::control::matrix::ControlMatrix;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::threshold::{
    enclosing_prefix_len, subgraph_positions, successions, ConstructionString, ThresholdGraph,
};

/// An eigenspace test matrix tied to one maximal run of a construction
/// string: its columns span the eigenspace the run creates, inside the
/// subgraph built by the run's enclosing prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckingMatrix {
    matrix: IntMatrix,
    eigenvalue: usize,
    prefix_len: usize,
}

impl CheckingMatrix {
    /// The n x m test matrix (n = subgraph size, m = run length).
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The eigenvalue the columns share, within the subgraph.
    pub fn eigenvalue(&self) -> usize {
        self.eigenvalue
    }

    /// Length in symbols of the enclosing prefix that builds the subgraph.
    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }
}

/// Writes the raw column pattern for a run of length `m` at the end of a
/// subgraph on `n` vertices.
///
/// A run of 1s pins the top of the order: columns e1 - e_{j+1} for
/// j = 1..m-1 plus (n - m) e1 - (e_{m+1} + ... + e_n), all eigenvectors for
/// eigenvalue n. A run of 0s pins the bottom, with the same pattern built
/// from the end (e-1 is the last coordinate) and one vertex fewer in play,
/// all eigenvectors for eigenvalue 1.
fn raw_columns(n: usize, m: usize, join: bool) -> IntMatrix {
    let e = |i1: usize| i1 - 1; // 1-based to 0-based
    let erev = |i1: usize| n - i1; // i-th coordinate from the end
    let idx: &dyn Fn(usize) -> usize = if join { &e } else { &erev };
    let span = if join { n } else { n - 1 };
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for j in 1..m {
        let mut v = vec![BigInt::zero(); n];
        v[idx(1)] = BigInt::from(1);
        v[idx(j + 1)] = BigInt::from(-1);
        cols.push(v);
    }
    let mut last = vec![BigInt::zero(); n];
    last[idx(1)] = BigInt::from((span - m) as i64);
    for j in m + 1..=span {
        last[idx(j)] = BigInt::from(-1);
    }
    cols.push(last);
    IntMatrix::from_fn(n, m, |i, j| cols[j][i].clone())
}

/// Validates that every column of `c` is a nonzero, zero-sum, exact
/// eigenvector of `l`, all for the same inferred eigenvalue, and returns
/// that eigenvalue.
fn validate_columns(l: &IntMatrix, c: &IntMatrix) -> Result<usize> {
    let mut shared: Option<BigInt> = None;
    for j in 0..c.cols() {
        let v = c.col(j);
        let image = l.mul_vec(&v)?;
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return Err(Error::BadCheckingColumn(j));
        };
        // Infer the eigenvalue from the pivot coordinate, exactly.
        let (lam, rem) = image[pivot].div_rem(&v[pivot]);
        if !rem.is_zero() {
            return Err(Error::BadCheckingColumn(j));
        }
        if (0..l.rows()).any(|i| image[i] != &lam * &v[i]) {
            return Err(Error::BadCheckingColumn(j));
        }
        if !v.iter().sum::<BigInt>().is_zero() {
            return Err(Error::BadCheckingColumn(j));
        }
        match &shared {
            Some(s) if *s != lam => return Err(Error::BadCheckingColumn(j)),
            Some(_) => {}
            None => shared = Some(lam),
        }
    }
    shared
        .as_ref()
        .and_then(BigInt::to_usize)
        .ok_or_else(|| Error::BadCheckingColumn(0))
}

/// One validated checking matrix per maximal run of `s`, left to right.
pub fn checking_family(s: &ConstructionString) -> Result<Vec<CheckingMatrix>> {
    successions(s)
        .iter()
        .map(|run| {
            let prefix_len = enclosing_prefix_len(s, run);
            let sub = ThresholdGraph::from_string(&s.prefix(prefix_len)?);
            let c = raw_columns(sub.k(), run.len(), run.join);
            let eigenvalue = validate_columns(sub.laplacian(), &c)?;
            let expected = if run.join { sub.k() } else { 1 };
            if eigenvalue != expected {
                return Err(Error::BadCheckingColumn(0));
            }
            Ok(CheckingMatrix { matrix: c, eigenvalue, prefix_len })
        })
        .collect()
}

/// The checking matrix of the final run of 1s of `s` (the whole string is
/// its own enclosing prefix).
pub fn local_checking_matrix(s: &ConstructionString) -> Result<CheckingMatrix> {
    let family = checking_family(s)?;
    Ok(family.into_iter().next_back().expect("every string has at least one run"))
}

/// Restricts a control matrix on the graph of `parent` to the rows of the
/// subgraph built by the first `prefix_len` symbols, preserving order.
pub fn local_control_matrix(
    parent: &ConstructionString,
    prefix_len: usize,
    b: &ControlMatrix,
) -> Result<ControlMatrix> {
    if b.k() != parent.k() {
        return Err(Error::DimensionMismatch(b.k(), b.p(), parent.k(), parent.k()));
    }
    b.restrict_rows(subgraph_positions(parent, prefix_len)?)
}

/// Outcome of a controllability decision, with whatever certificate the
/// deciding method produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControllabilityReport {
    pub controllable: bool,
    /// An uncontrollable eigenvector orthogonal to every input column.
    pub witness: Option<Vec<BigInt>>,
    /// The enclosing prefix whose rank test failed.
    pub failing_prefix: Option<ConstructionString>,
}

impl ControllabilityReport {
    pub fn controllable() -> Self {
        ControllabilityReport { controllable: true, witness: None, failing_prefix: None }
    }
}

/// Decides controllability of (L, B) by per-run local rank tests: for every
/// maximal run, the product C^T B restricted to the subgraph block must have
/// full row rank (the run's multiplicity), and the all-ones kernel mode must
/// see a nonzero column sum.
pub fn local_rank_check(g: &ThresholdGraph, b: &ControlMatrix) -> Result<ControllabilityReport> {
    if b.k() != g.k() {
        return Err(Error::DimensionMismatch(b.k(), b.p(), g.k(), g.k()));
    }
    if b.column_sums().iter().all(Zero::is_zero) {
        // No input reaches the average mode.
        return Ok(ControllabilityReport {
            controllable: false,
            witness: Some(vec![BigInt::from(1); g.k()]),
            failing_prefix: None,
        });
    }
    let Some(s) = g.string() else {
        return Ok(ControllabilityReport::controllable()); // singleton: only the kernel mode exists
    };
    let b_int = b.to_integer_scaled();
    for check in checking_family(s)? {
        let range = subgraph_positions(s, check.prefix_len())?;
        let rows: Vec<usize> = range.collect();
        let all_cols: Vec<usize> = (0..b.p()).collect();
        let b_block = b_int.submatrix(&rows, &all_cols);
        let product = check.matrix().transpose().matmul(&b_block)?;
        if product.rank_exact() < check.matrix().cols() {
            return Ok(ControllabilityReport {
                controllable: false,
                witness: None,
                failing_prefix: Some(s.prefix(check.prefix_len())?),
            });
        }
    }
    Ok(ControllabilityReport::controllable())
}
