//! Antiregular graphs and the bridged pair construction.
//!
//! The connected antiregular graph on m vertices is the threshold graph
//! whose degrees take every value in {floor(m/2), ..., m-1} exactly once
//! except the repeated floor(m/2). Joining two of them (sizes ceil(k/2) and
//! floor(k/2)) by one bridge edge gives a k-vertex graph whose Laplacian
//! spectrum can be certified distinct, which makes it single-input
//! controllable from any vertex once every eigenvector entry is nonzero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::control::{kalman_rank, ControlKind, ControlMatrix};
use crate::error::{Error, Result};
use crate::linalg::{eig_sym_float, eig_sym_float_with_vectors, IntMatrix};
use crate::threshold::{ConstructionString, ThresholdGraph};

/// The construction string of the connected antiregular graph on k >= 2
/// vertices: symbols alternate ...0101, read so that the string ends in 1.
pub fn antiregular_string(k: usize) -> Result<ConstructionString> {
    if k < 2 {
        return Err(Error::Singleton);
    }
    let bits: Vec<bool> = (1..k).map(|i| (k - 1 - i) % 2 == 0).collect();
    ConstructionString::new(bits)
}

/// The connected antiregular graph on k >= 1 vertices.
pub fn antiregular(k: usize) -> ThresholdGraph {
    if k == 1 {
        return ThresholdGraph::singleton();
    }
    ThresholdGraph::from_string(&antiregular_string(k).expect("k >= 2"))
}

/// Closed-form Laplacian spectrum of the antiregular graph on m vertices:
/// {0, 1, ..., m} with ceil(m/2) removed, nonincreasing.
pub fn antiregular_spectrum(m: usize) -> Vec<usize> {
    let skip = m.div_ceil(2);
    (0..=m).rev().filter(|&x| x != skip).collect()
}

/// Two antiregular blocks joined by a single bridge edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinedGraph {
    k: usize,
    kappa_hi: usize,
    kappa_lo: usize,
    block_laplacian: IntMatrix,
    laplacian: IntMatrix,
    bridge: (usize, usize),
}

/// Builds the bridged pair on k >= 2 vertices: blocks of ceil(k/2) and
/// floor(k/2) vertices, with the bridge from the first block's dominating
/// vertex to vertex ceil(floor(k/2)/2) of the second block.
pub fn combine(k: usize) -> Result<CombinedGraph> {
    if k < 4 {
        return Err(Error::InvalidInput("the bridged pair needs at least 4 vertices".into()));
    }
    let kappa_hi = k.div_ceil(2);
    let kappa_lo = k / 2;
    let a = antiregular(kappa_hi);
    let b = antiregular(kappa_lo);
    let block_laplacian = IntMatrix::block_diag(&[a.laplacian(), b.laplacian()]);
    let bridge = (0, kappa_hi + kappa_lo.div_ceil(2) - 1);
    let mut laplacian = block_laplacian.clone();
    let (u, v) = bridge;
    laplacian[(u, u)] += 1;
    laplacian[(v, v)] += 1;
    laplacian[(u, v)] -= 1;
    laplacian[(v, u)] -= 1;
    Ok(CombinedGraph { k, kappa_hi, kappa_lo, block_laplacian, laplacian, bridge })
}

impl CombinedGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn block_sizes(&self) -> (usize, usize) {
        (self.kappa_hi, self.kappa_lo)
    }

    /// The Laplacian of the disjoint blocks, before the bridge.
    pub fn block_laplacian(&self) -> &IntMatrix {
        &self.block_laplacian
    }

    /// The bridged Laplacian.
    pub fn laplacian(&self) -> &IntMatrix {
        &self.laplacian
    }

    /// Bridge endpoints, 0-based.
    pub fn bridge(&self) -> (usize, usize) {
        self.bridge
    }

    /// The rank-one update vector z with L = L_blocks + z z^T.
    pub fn bridge_vector(&self) -> Vec<BigInt> {
        let mut z = vec![BigInt::zero(); self.k];
        z[self.bridge.0] = BigInt::one();
        z[self.bridge.1] = -BigInt::one();
        z
    }

    /// The exact spectrum of the unbridged blocks, nonincreasing.
    pub fn block_spectrum(&self) -> Vec<usize> {
        let hi = antiregular_spectrum(self.kappa_hi);
        let lo = antiregular_spectrum(self.kappa_lo);
        let mut all: Vec<usize> = hi.into_iter().chain(lo).collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }
}

/// Certifies that the bridged Laplacian has k distinct eigenvalues and
/// retains every integer eigenvalue in {0..ceil(k/2)-1} minus the skipped
/// middle value: the characteristic polynomial must be squarefree and
/// vanish at each of those integers.
pub fn certify_distinct_spectrum(c: &CombinedGraph) -> Result<bool> {
    let p = c.laplacian().char_poly()?;
    if !p.is_squarefree()? {
        return Ok(false);
    }
    let skip = c.kappa_hi.div_ceil(2);
    let retained = (0..c.kappa_hi).filter(|&x| x != skip);
    for lambda in retained {
        if !p.eval_i64(lambda as i64).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks rank-one interlacing of the bridged spectrum between the exact
/// block eigenvalues.
///
/// With the exact block spectrum mu_1 <= ... <= mu_k and the bridged
/// eigenvalues nu_1 <= ... <= nu_k (computed numerically), Weyl interlacing
/// demands mu_i - tol <= nu_i <= mu_{i+1} + tol. Duplicated block values pin
/// the odd positions, so distinctness forces every even position strictly
/// inside its interval: nu_{2i} > mu_{2i} + tol, and nu_{2i} < mu_{2i+1} - tol
/// while 2i+1 <= k.
pub fn interlacing_check(c: &CombinedGraph, tol: f64) -> Result<bool> {
    let mut mu: Vec<f64> = c.block_spectrum().iter().map(|&x| x as f64).collect();
    mu.reverse(); // ascending
    let nu = eig_sym_float(c.laplacian(), 1e-12)?;
    let k = c.k();
    for i in 0..k {
        if nu[i] < mu[i] - tol {
            return Ok(false);
        }
        if i + 1 < k && nu[i] > mu[i + 1] + tol {
            return Ok(false);
        }
    }
    for pos in (1..k).step_by(2) {
        // 0-based even slots are 1-based positions 2, 4, ...
        if nu[pos] <= mu[pos] + tol {
            return Ok(false);
        }
        if pos + 1 < k && nu[pos] >= mu[pos + 1] - tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// After certifying the spectrum distinct, verifies numerically that every
/// unit eigenvector of the bridged Laplacian has nonzero entries at the two
/// middle vertices of the first block (1-based positions ceil(k/2)/2 rounded
/// up, and the one after).
pub fn eigenvector_entry_check(
    c: &CombinedGraph,
    entry_tol: f64,
    residual_tol: f64,
) -> Result<bool> {
    if !certify_distinct_spectrum(c)? {
        return Err(Error::NotCertified);
    }
    let (values, vectors) = eig_sym_float_with_vectors(c.laplacian(), 1e-13)?;
    let a = c.laplacian().to_f64();
    let k = c.k();
    let mid = c.kappa_hi.div_ceil(2) - 1; // 0-based
    for j in 0..k {
        let v = &vectors[j];
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let residual = (0..k)
            .map(|i| {
                let image: f64 = (0..k).map(|l| a[i][l] * v[l]).sum();
                (image - values[j] * v[i]).abs()
            })
            .fold(0.0f64, f64::max);
        if residual > residual_tol * norm.max(1.0) {
            return Err(Error::InvalidInput(format!(
                "eigenvector {j} residual {residual:.3e} too large"
            )));
        }
        if v[mid].abs() <= entry_tol * norm || v[mid + 1].abs() <= entry_tol * norm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Three equivalent single-input tests on the antiregular block of the
/// bridged pair, for a binary input vector over the first block:
/// Kalman on the block alone, the closed-form middle-entry criterion
/// (exactly one of the two middle entries driven), and Kalman on the full
/// bridged graph with the vector zero-padded. Returns the triple and errors
/// if its entries disagree.
pub fn single_input_equivalence(k: usize, b_bar: &[bool]) -> Result<(bool, bool, bool)> {
    let c = combine(k)?;
    let (kappa_hi, _) = c.block_sizes();
    if b_bar.len() != kappa_hi {
        return Err(Error::DimensionMismatch(kappa_hi, 1, b_bar.len(), 1));
    }
    let a = antiregular(kappa_hi);
    let as_column = |bits: &[bool]| -> Result<ControlMatrix> {
        let rows = bits
            .iter()
            .map(|&x| vec![if x { BigRational::one() } else { BigRational::zero() }])
            .collect();
        ControlMatrix::new(ControlKind::General, rows)
    };

    let s1 = kalman_rank(a.laplacian(), &as_column(b_bar)?)? == kappa_hi;

    let mid = kappa_hi.div_ceil(2) - 1; // 0-based
    let s2 = (b_bar[mid] as usize) + (b_bar[mid + 1] as usize) == 1;

    let mut padded = b_bar.to_vec();
    padded.resize(k, false);
    let s3 = kalman_rank(c.laplacian(), &as_column(&padded)?)? == k;

    if s1 != s2 || s2 != s3 {
        return Err(Error::EquivalenceViolation(format!(
            "k={k}, input {:?}: block-kalman={s1}, middle-entries={s2}, bridged-kalman={s3}",
            b_bar
        )));
    }
    Ok((s1, s2, s3))
}

/// Connectivity statistics of any graph given by its Laplacian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub diameter: usize,
    pub max_degree: usize,
}

/// BFS diameter and maximum degree; errors if the graph is disconnected.
pub fn graph_stats(l: &IntMatrix) -> Result<GraphStats> {
    use num_traits::ToPrimitive;
    if !l.is_square() {
        return Err(Error::NotSquare(l.rows(), l.cols()));
    }
    let k = l.rows();
    if k == 0 {
        return Err(Error::EmptySequence);
    }
    let adj: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| j != i && !l[(i, j)].is_zero()).collect())
        .collect();
    let mut diameter = 0usize;
    for start in 0..k {
        let mut dist = vec![usize::MAX; k];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        let far = *dist.iter().max().unwrap();
        if far == usize::MAX {
            return Err(Error::Disconnected);
        }
        diameter = diameter.max(far);
    }
    let max_degree =
        (0..k).map(|i| l[(i, i)].to_usize().unwrap_or(0)).max().unwrap();
    Ok(GraphStats { diameter, max_degree })
}
