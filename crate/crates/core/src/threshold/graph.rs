use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::threshold::seq::{is_threshold, DegreeSequence};
use crate::threshold::string::ConstructionString;

/// A threshold graph in canonical vertex order (degrees nonincreasing,
/// equal-degree vertices ordered by construction).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThresholdGraph {
    degrees: DegreeSequence,
    string: Option<ConstructionString>,
    laplacian: IntMatrix,
}

impl ThresholdGraph {
    /// The 1-vertex graph, the only threshold graph without a string.
    pub fn singleton() -> Self {
        ThresholdGraph {
            degrees: DegreeSequence::new(vec![0]).unwrap(),
            string: None,
            laplacian: IntMatrix::zeros(1, 1),
        }
    }

    /// Builds the graph a construction string describes, with vertices in
    /// canonical order: each dominating vertex goes to the front of the
    /// order, each isolated vertex to the back.
    pub fn from_string(s: &ConstructionString) -> Self {
        let k = s.k();
        let mut order: VecDeque<usize> = VecDeque::with_capacity(k);
        order.push_back(0);
        // adj is indexed by insertion id, not canonical position.
        let mut adj = vec![vec![false; k]; k];
        for (step, &join) in s.bits().iter().enumerate() {
            let v = step + 1;
            if join {
                for u in 0..v {
                    adj[v][u] = true;
                    adj[u][v] = true;
                }
                order.push_front(v);
            } else {
                order.push_back(v);
            }
        }

        let laplacian = IntMatrix::from_fn(k, k, |p, q| {
            let (u, v) = (order[p], order[q]);
            let entry: i64 = if p == q {
                adj[u].iter().filter(|&&e| e).count() as i64
            } else if adj[u][v] {
                -1
            } else {
                0
            };
            entry.into()
        });
        let degrees = laplacian_diagonal(&laplacian)
            .and_then(DegreeSequence::new)
            .expect("canonical construction sorts degrees");
        ThresholdGraph { degrees, string: Some(s.clone()), laplacian }
    }

    /// Rebuilds the graph whose degree sequence is `d`.
    pub fn from_degrees(d: &DegreeSequence) -> Result<Self> {
        if d.k() == 1 {
            return if d.values() == [0] { Ok(Self::singleton()) } else { Err(Error::NotThreshold) };
        }
        let s = string_from_degrees(d)?;
        let g = Self::from_string(&s);
        debug_assert_eq!(g.degrees(), d);
        Ok(g)
    }

    pub fn k(&self) -> usize {
        self.degrees.k()
    }

    pub fn degrees(&self) -> &DegreeSequence {
        &self.degrees
    }

    pub fn string(&self) -> Option<&ConstructionString> {
        self.string.as_ref()
    }

    pub fn laplacian(&self) -> &IntMatrix {
        &self.laplacian
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        use num_traits::Zero;
        i != j && !self.laplacian[(i, j)].is_zero()
    }
}

fn laplacian_diagonal(l: &IntMatrix) -> Result<Vec<usize>> {
    use num_traits::ToPrimitive;
    (0..l.rows())
        .map(|i| {
            let v = &l[(i, i)];
            v.to_usize()
                .ok_or_else(|| Error::NotCanonicalLaplacian(format!("diagonal entry {v} at {i}")))
        })
        .collect()
}

/// Recovers the construction string from a connected threshold degree
/// sequence by peeling dominating and isolated vertices.
pub fn string_from_degrees(d: &DegreeSequence) -> Result<ConstructionString> {
    if d.k() == 1 {
        return Err(Error::Singleton);
    }
    if !is_threshold(d) {
        return Err(Error::NotThreshold);
    }
    if !d.has_no_isolated_vertex() {
        return Err(Error::Disconnected);
    }
    let mut m: VecDeque<usize> = d.values().iter().copied().collect();
    let mut offset = 0usize; // every remaining degree is really m[i] - offset
    let mut bits_rev = Vec::with_capacity(d.k() - 1);
    while m.len() > 1 {
        let cur_k = m.len();
        if m[0] - offset == cur_k - 1 {
            bits_rev.push(true);
            m.pop_front();
            offset += 1;
        } else if m[cur_k - 1] == offset {
            bits_rev.push(false);
            m.pop_back();
        } else {
            // Threshold sequences always expose a dominating or isolated
            // vertex; is_threshold above rules this branch out.
            unreachable!("threshold peel found neither dominating nor isolated vertex");
        }
    }
    bits_rev.reverse();
    ConstructionString::new(bits_rev)
}

/// Checks that `l` is the Laplacian of a connected threshold graph in
/// canonical vertex order and returns its degree sequence. The canonical
/// pattern is fully determined by the diagonal: below the diagonal, row i
/// (0-based) has -1 exactly in columns j < d_i.
pub fn canonical_laplacian_degrees(l: &IntMatrix) -> Result<DegreeSequence> {
    use num_traits::Zero;
    let bad = |msg: String| Error::NotCanonicalLaplacian(msg);
    if !l.is_square() {
        return Err(Error::NotSquare(l.rows(), l.cols()));
    }
    let k = l.rows();
    if k == 0 {
        return Err(Error::EmptySequence);
    }
    let diag = laplacian_diagonal(l)?;
    let d = DegreeSequence::new(diag)?;
    if k == 1 {
        return if l[(0, 0)].is_zero() {
            Ok(d)
        } else {
            Err(bad("1-vertex graph must have zero Laplacian".into()))
        };
    }
    if !d.has_no_isolated_vertex() {
        return Err(Error::Disconnected);
    }
    for i in 0..k {
        for j in 0..i {
            let expected = if j < d.values()[i] { -1i64 } else { 0 };
            if l[(i, j)] != expected.into() {
                return Err(bad(format!("entry ({i},{j}) should be {expected}")));
            }
            if l[(j, i)] != l[(i, j)] {
                return Err(Error::NotSymmetric(j, i));
            }
        }
        let row_sum: num_bigint::BigInt = l.row(i).iter().sum();
        if !row_sum.is_zero() {
            return Err(bad(format!("row {i} does not sum to zero")));
        }
    }
    if !is_threshold(&d) {
        return Err(Error::NotThreshold);
    }
    Ok(d)
}

/// Canonical positions (0-based, contiguous) that the subgraph built by the
/// first `prefix_len` symbols of `parent` occupies inside the parent's
/// canonical order: its vertices sit right after the dominating vertices
/// that later symbols add.
pub fn subgraph_positions(
    parent: &ConstructionString,
    prefix_len: usize,
) -> Result<std::ops::Range<usize>> {
    if prefix_len == 0 || prefix_len > parent.len() {
        return Err(Error::IndexOutOfRange(prefix_len, parent.len()));
    }
    let later_joins = parent.bits()[prefix_len..].iter().filter(|&&b| b).count();
    Ok(later_joins..later_joins + prefix_len + 1)
}
