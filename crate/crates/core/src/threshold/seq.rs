use crate::error::{Error, Result};

/// A nonincreasing sequence of vertex degrees.
#[derive(Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    d: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(d: Vec<usize>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(i) = (1..d.len()).find(|&i| d[i] > d[i - 1]) {
            return Err(Error::NotSorted(i));
        }
        Ok(DegreeSequence { d })
    }

    pub fn k(&self) -> usize {
        self.d.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.d
    }

    pub fn sum(&self) -> usize {
        self.d.iter().sum()
    }

    /// Trace: the number of positions j (1-based) with d_j >= j.
    pub fn trace(&self) -> usize {
        self.d.iter().enumerate().filter(|&(i, &dj)| dj >= i + 1).count()
    }

    /// Distinct values with multiplicities, in descending value order.
    pub fn classes(&self) -> Vec<(usize, usize)> {
        runs(&self.d)
    }

    /// Index ranges of the degree classes, left to right.
    pub fn class_ranges(&self) -> Vec<std::ops::Range<usize>> {
        run_ranges(&self.d)
    }

    /// True when no vertex is isolated (for threshold graphs this is
    /// exactly connectedness, once k >= 2).
    pub fn has_no_isolated_vertex(&self) -> bool {
        *self.d.last().unwrap() >= 1
    }
}

impl std::fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DegreeSequence({:?})", self.d)
    }
}

/// The conjugate of a degree sequence: entry i (1-based) counts the degrees
/// that are >= i. Kept at length k, so trailing zeros are explicit.
#[derive(Clone, PartialEq, Eq)]
pub struct ConjugateSequence {
    dstar: Vec<usize>,
}

impl ConjugateSequence {
    pub fn values(&self) -> &[usize] {
        &self.dstar
    }

    pub fn k(&self) -> usize {
        self.dstar.len()
    }

    pub fn sum(&self) -> usize {
        self.dstar.iter().sum()
    }

    /// Distinct values with multiplicities, descending.
    pub fn classes(&self) -> Vec<(usize, usize)> {
        runs(&self.dstar)
    }

    pub fn class_ranges(&self) -> Vec<std::ops::Range<usize>> {
        run_ranges(&self.dstar)
    }

    /// The largest multiplicity among the values (the zero entry included).
    pub fn max_multiplicity(&self) -> usize {
        self.classes().iter().map(|&(_, m)| m).max().unwrap_or(0)
    }
}

impl std::fmt::Debug for ConjugateSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ConjugateSequence({:?})", self.dstar)
    }
}

fn runs(values: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &v in values {
        match out.last_mut() {
            Some((value, mult)) if *value == v => *mult += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

fn run_ranges(values: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for (v, m) in runs(values) {
        let _ = v;
        out.push(start..start + m);
        start += m;
    }
    out
}

/// Conjugate sequence of `d`, length k with trailing zeros kept.
pub fn conjugate(d: &DegreeSequence) -> ConjugateSequence {
    let k = d.k();
    let dstar = (1..=k).map(|i| d.values().iter().filter(|&&dj| dj >= i).count()).collect();
    ConjugateSequence { dstar }
}

/// Partial sums of d_j + 1 and of the conjugate, compared on the first
/// `trace` positions: returns (all <=, all ==).
fn dominance(d: &DegreeSequence) -> (bool, bool) {
    let dstar = conjugate(d);
    let tau = d.trace();
    let (mut le, mut eq) = (true, true);
    let (mut lhs, mut rhs) = (0usize, 0usize);
    for j in 0..tau {
        lhs += d.values()[j] + 1;
        rhs += dstar.values()[j];
        le &= lhs <= rhs;
        eq &= lhs == rhs;
    }
    (le, eq)
}

/// The conjugate-dominance test alone: partial sums of d_j + 1 never exceed
/// those of the conjugate on the first trace-many positions. This is the
/// Ferrers-diagram comparison and deliberately ignores degree-sum parity.
pub fn satisfies_dominance_condition(d: &DegreeSequence) -> bool {
    dominance(d).0
}

/// True when `d` is the degree sequence of some simple graph: even degree
/// sum plus the conjugate-dominance condition.
pub fn is_graphical(d: &DegreeSequence) -> bool {
    d.sum() % 2 == 0 && satisfies_dominance_condition(d)
}

/// True when `d` is the degree sequence of a threshold graph: graphical,
/// with the dominance comparison holding with equality everywhere.
pub fn is_threshold(d: &DegreeSequence) -> bool {
    d.sum() % 2 == 0 && dominance(d).1
}

/// Trace of a degree sequence (free-function form).
pub fn trace_of(d: &DegreeSequence) -> usize {
    d.trace()
}
