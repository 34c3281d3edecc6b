use crate::error::{Error, Result};

/// A binary construction string for a connected threshold graph on k >= 2
/// vertices: one symbol per vertex added after the first, 0 = add isolated,
/// 1 = add dominating. The last symbol is always 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConstructionString {
    bits: Vec<bool>,
}

impl ConstructionString {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyString);
        }
        if !bits.last().unwrap() {
            return Err(Error::TrailingZero);
        }
        Ok(ConstructionString { bits })
    }

    /// Parses a string of '0'/'1' characters such as "0011000101".
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::BadStringChar(other)),
            }
        }
        ConstructionString::new(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of vertices of the graph the string builds.
    pub fn k(&self) -> usize {
        self.bits.len() + 1
    }

    /// The prefix of the first `len` symbols, which must itself end in 1.
    pub fn prefix(&self, len: usize) -> Result<ConstructionString> {
        if len == 0 || len > self.bits.len() {
            return Err(Error::IndexOutOfRange(len, self.bits.len()));
        }
        ConstructionString::new(self.bits[..len].to_vec())
    }

    /// All construction strings on k vertices (2^(k-2) of them for k >= 2).
    pub fn enumerate_all(k: usize) -> Vec<ConstructionString> {
        assert!(k >= 2, "construction strings need at least 2 vertices");
        let free = k - 2;
        (0u64..1 << free)
            .map(|mask| {
                let mut bits: Vec<bool> = (0..free).map(|i| mask >> i & 1 == 1).collect();
                bits.push(true);
                ConstructionString { bits }
            })
            .collect()
    }
}

impl std::fmt::Display for ConstructionString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for ConstructionString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ConstructionString({self})")
    }
}

impl std::str::FromStr for ConstructionString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionString::parse(s)
    }
}

/// A maximal run of equal symbols inside a construction string.
/// `start..=end` are 0-based symbol positions; `join` is the symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Succession {
    pub start: usize,
    pub end: usize,
    pub join: bool,
}

impl Succession {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The maximal runs of a string, left to right.
pub fn successions(s: &ConstructionString) -> Vec<Succession> {
    let bits = s.bits();
    let mut out: Vec<Succession> = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        match out.last_mut() {
            Some(run) if run.join == b => run.end = i,
            _ => out.push(Succession { start: i, end: i, join: b }),
        }
    }
    out
}

/// The shortest prefix of `s` that contains the run and still ends in 1:
/// a run of 1s closes itself, a run of 0s borrows the single 1 after it.
/// Returns the prefix length in symbols.
pub fn enclosing_prefix_len(s: &ConstructionString, run: &Succession) -> usize {
    if run.join {
        return run.end + 1;
    }
    debug_assert!(
        run.end + 1 < s.len() && s.bits()[run.end + 1],
        "maximal 0-run must be followed by a 1"
    );
    run.end + 2
}

/// The distinct prefixes of `s` that close a run of 1s, in increasing
/// length; the full string is always the last entry.
pub fn essential_substrings(s: &ConstructionString) -> Vec<ConstructionString> {
    let mut lens: Vec<usize> =
        successions(s).iter().map(|run| enclosing_prefix_len(s, run)).collect();
    lens.sort_unstable();
    lens.dedup();
    lens.into_iter().map(|len| s.prefix(len).expect("prefix closes a run of 1s")).collect()
}
