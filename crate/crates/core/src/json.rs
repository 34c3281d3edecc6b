//! JSON exchange types for the command-line interface.
//!
//! Graph and basis payloads carry exact integers only; rationals appear as
//! "p/q" strings and oversized integers as decimal strings, so nothing is
//! ever rounded.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use crate::antiregular::{graph_stats, CombinedGraph};
use crate::control::{ControlKind, ControlMatrix, ControllabilityReport};
use crate::error::{Error, Result};
use crate::spectra::EigenBasis;
use crate::threshold::{canonical_laplacian_degrees, ConstructionString, DegreeSequence, ThresholdGraph};

/// An exact number serialized as a JSON integer when it fits in i64, and as
/// a decimal or "p/q" string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactNumber {
    Int(i64),
    Text(String),
}

impl From<&BigInt> for ExactNumber {
    fn from(x: &BigInt) -> Self {
        match x.to_i64() {
            Some(v) => ExactNumber::Int(v),
            None => ExactNumber::Text(x.to_string()),
        }
    }
}

impl From<&BigRational> for ExactNumber {
    fn from(x: &BigRational) -> Self {
        if x.is_integer() {
            ExactNumber::from(&x.to_integer())
        } else {
            ExactNumber::Text(format!("{}/{}", x.numer(), x.denom()))
        }
    }
}

impl ExactNumber {
    pub fn to_bigint(&self) -> Result<BigInt> {
        match self {
            ExactNumber::Int(v) => Ok(BigInt::from(*v)),
            ExactNumber::Text(s) => BigInt::from_str(s)
                .map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}"))),
        }
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        match self {
            ExactNumber::Int(v) => Ok(BigRational::from_integer(BigInt::from(*v))),
            ExactNumber::Text(s) => BigRational::from_str(s)
                .map_err(|_| Error::InvalidInput(format!("not a rational: {s:?}"))),
        }
    }
}

/// A construction string, accepted compact ("0011") or as a bit array
/// ([0,0,1,1]); always re-serialized compact.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum StringRepr {
    Compact(String),
    Bits(Vec<u8>),
}

impl Serialize for StringRepr {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            StringRepr::Compact(s) => ser.serialize_str(s),
            StringRepr::Bits(bits) => {
                let compact: String =
                    bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect();
                ser.serialize_str(&compact)
            }
        }
    }
}

impl StringRepr {
    pub fn to_construction_string(&self) -> Result<ConstructionString> {
        match self {
            StringRepr::Compact(s) => ConstructionString::parse(s),
            StringRepr::Bits(bits) => {
                let bools = bits
                    .iter()
                    .map(|&b| match b {
                        0 => Ok(false),
                        1 => Ok(true),
                        other => Err(Error::BadStringChar(
                            char::from_digit(u32::from(other) % 10, 10).unwrap_or('?'),
                        )),
                    })
                    .collect::<Result<Vec<bool>>>()?;
                ConstructionString::new(bools)
            }
        }
    }
}

/// Serialized threshold graph. On input any one of `string`, `degrees`, or
/// `laplacian` suffices; every field that is present is cross-checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default)]
    pub string: Option<StringRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub laplacian: Option<Vec<Vec<i64>>>,
}

impl From<&ThresholdGraph> for GraphJson {
    fn from(g: &ThresholdGraph) -> Self {
        GraphJson {
            k: Some(g.k()),
            string: g.string().map(|s| StringRepr::Compact(s.to_string())),
            degrees: Some(g.degrees().values().to_vec()),
            laplacian: Some(g.laplacian().to_i64().expect("Laplacian entries fit i64")),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<ThresholdGraph> {
        let g = if let Some(repr) = &self.string {
            ThresholdGraph::from_string(&repr.to_construction_string()?)
        } else if let Some(d) = &self.degrees {
            ThresholdGraph::from_degrees(&DegreeSequence::new(d.clone())?)?
        } else if let Some(rows) = &self.laplacian {
            let l = int_matrix_from_rows(rows)?;
            let d = canonical_laplacian_degrees(&l)?;
            ThresholdGraph::from_degrees(&d)?
        } else {
            return Err(Error::InvalidInput(
                "graph input needs a string, degrees, or laplacian".into(),
            ));
        };
        if let Some(k) = self.k {
            if k != g.k() {
                return Err(Error::InvalidInput(format!(
                    "k={} does not match the {}-vertex graph",
                    k,
                    g.k()
                )));
            }
        }
        if let Some(d) = &self.degrees {
            if d != g.degrees().values() {
                return Err(Error::InvalidInput("degrees do not match the string".into()));
            }
        }
        if let Some(rows) = &self.laplacian {
            if int_matrix_from_rows(rows)? != *g.laplacian() {
                return Err(Error::InvalidInput("laplacian does not match the graph".into()));
            }
        }
        Ok(g)
    }
}

fn int_matrix_from_rows(rows: &[Vec<i64>]) -> Result<crate::linalg::IntMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || rows.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput("matrix rows must be nonempty and rectangular".into()));
    }
    Ok(crate::linalg::IntMatrix::from_rows(rows))
}

/// Serialized eigenbasis: integer eigenvector columns and their eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenJson {
    pub eigenvalues: Vec<usize>,
    #[serde(rename = "V")]
    pub vectors: Vec<Vec<ExactNumber>>,
}

impl From<&EigenBasis> for EigenJson {
    fn from(basis: &EigenBasis) -> Self {
        let m = basis.vectors();
        EigenJson {
            eigenvalues: basis.eigenvalues().to_vec(),
            vectors: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| ExactNumber::from(&m[(i, j)])).collect())
                .collect(),
        }
    }
}

/// Serialized controllability decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub controllable: bool,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<ExactNumber>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_substring: Option<String>,
    pub min_controllers: MinControllersJson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinControllersJson {
    pub binary: usize,
    pub terminal: usize,
}

impl ReportJson {
    /// `method` is a decision method name or "all" for the cross-validated
    /// run.
    pub fn new(
        report: &ControllabilityReport,
        method: &str,
        min_controllers: (usize, usize),
    ) -> Self {
        ReportJson {
            controllable: report.controllable,
            method: method.to_string(),
            witness: report
                .witness
                .as_ref()
                .map(|w| w.iter().map(ExactNumber::from).collect()),
            failing_substring: report.failing_prefix.as_ref().map(ToString::to_string),
            min_controllers: MinControllersJson {
                binary: min_controllers.0,
                terminal: min_controllers.1,
            },
        }
    }
}

/// Serialized control matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControlMatrixJson {
    pub kind: String,
    #[serde(rename = "B")]
    pub b: Vec<Vec<ExactNumber>>,
}

impl From<&ControlMatrix> for ControlMatrixJson {
    fn from(m: &ControlMatrix) -> Self {
        let kind = match m.kind() {
            ControlKind::General => "general",
            ControlKind::Binary => "binary",
            ControlKind::Terminal => "terminal",
        };
        ControlMatrixJson {
            kind: kind.to_string(),
            b: (0..m.k())
                .map(|i| (0..m.p()).map(|j| ExactNumber::from(&m[(i, j)])).collect())
                .collect(),
        }
    }
}

impl ControlMatrixJson {
    pub fn to_control_matrix(&self) -> Result<ControlMatrix> {
        let kind = match self.kind.as_str() {
            "general" => ControlKind::General,
            "binary" => ControlKind::Binary,
            "terminal" => ControlKind::Terminal,
            other => {
                return Err(Error::InvalidInput(format!("unknown control matrix kind {other:?}")))
            }
        };
        let rows = self
            .b
            .iter()
            .map(|row| row.iter().map(ExactNumber::to_rational).collect())
            .collect::<Result<Vec<Vec<BigRational>>>>()?;
        ControlMatrix::new(kind, rows)
    }
}

/// Serialized bridged antiregular pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedJson {
    pub k: usize,
    /// Bridge endpoints, 1-based.
    pub bridge: [usize; 2],
    pub laplacian: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_distinct: Option<bool>,
    pub stats: StatsJson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub diameter: usize,
    pub max_degree: usize,
}

impl CombinedJson {
    pub fn new(c: &CombinedGraph, certified_distinct: Option<bool>) -> Result<Self> {
        let stats = graph_stats(c.laplacian())?;
        let (u, v) = c.bridge();
        Ok(CombinedJson {
            k: c.k(),
            bridge: [u + 1, v + 1],
            laplacian: c.laplacian().to_i64()?,
            certified_distinct,
            stats: StatsJson { diameter: stats.diameter, max_degree: stats.max_degree },
        })
    }
}

/// One row of the batch sweep summary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRowJson {
    pub k: usize,
    pub strings: usize,
    pub eigenbasis_ok: bool,
    pub designs_ok: bool,
    pub methods_agree: bool,
}

/// Batch sweep summary over all construction strings up to `max_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJson {
    pub max_k: usize,
    pub ok: bool,
    pub rows: Vec<SweepRowJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::control::Method;
    use num_traits::One;

    #[test]
    fn exact_numbers_round_trip() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        assert_eq!(ExactNumber::from(&big), ExactNumber::Text(big.to_string()));
        assert_eq!(ExactNumber::from(&big).to_bigint().unwrap(), big);
        assert_eq!(ExactNumber::from(&BigInt::from(-7)), ExactNumber::Int(-7));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(ExactNumber::from(&half), ExactNumber::Text("1/2".into()));
        assert_eq!(ExactNumber::Text("1/2".into()).to_rational().unwrap(), half);
        assert_eq!(ExactNumber::Int(3).to_rational().unwrap(), BigRational::from_integer(3.into()));
        assert!(ExactNumber::Text("1/2".into()).to_bigint().is_err());
        assert!(ExactNumber::Text("xyz".into()).to_rational().is_err());
    }

    #[test]
    fn graph_json_round_trips_all_forms() {
        let g = ThresholdGraph::from_string(&"0011000101".parse().unwrap());
        let full = GraphJson::from(&g);
        let text = serde_json::to_string(&full).unwrap();
        let parsed: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_graph().unwrap(), g);

        let by_string: GraphJson = serde_json::from_str(r#"{"string": "0011000101"}"#).unwrap();
        assert_eq!(by_string.to_graph().unwrap(), g);
        let by_bits: GraphJson =
            serde_json::from_str(r#"{"string": [0,0,1,1,0,0,0,1,0,1]}"#).unwrap();
        assert_eq!(by_bits.to_graph().unwrap(), g);
        let by_degrees: GraphJson =
            serde_json::from_str(r#"{"degrees": [10,9,6,6,4,4,4,2,2,2,1]}"#).unwrap();
        assert_eq!(by_degrees.to_graph().unwrap(), g);

        // Bit-array form re-serializes compact.
        let echoed = serde_json::to_string(&by_bits).unwrap();
        assert_eq!(echoed, r#"{"string":"0011000101"}"#);
    }

    #[test]
    fn graph_json_cross_checks_fields() {
        let bad_k: GraphJson = serde_json::from_str(r#"{"k": 3, "string": "01"}"#).unwrap();
        assert!(bad_k.to_graph().is_ok());
        let wrong_k: GraphJson = serde_json::from_str(r#"{"k": 4, "string": "01"}"#).unwrap();
        assert!(wrong_k.to_graph().is_err());
        let wrong_d: GraphJson =
            serde_json::from_str(r#"{"string": "01", "degrees": [2,2,2]}"#).unwrap();
        assert!(wrong_d.to_graph().is_err());
        let empty: GraphJson = serde_json::from_str("{}").unwrap();
        assert!(empty.to_graph().is_err());
        let not_threshold: GraphJson =
            serde_json::from_str(r#"{"degrees": [5,2,2,2,1,1]}"#).unwrap();
        assert!(not_threshold.to_graph().is_err());
    }

    #[test]
    fn graph_json_accepts_its_own_laplacian() {
        let g = ThresholdGraph::from_string(&"001".parse().unwrap());
        let only_l = GraphJson {
            k: None,
            string: None,
            degrees: None,
            laplacian: Some(g.laplacian().to_i64().unwrap()),
        };
        assert_eq!(only_l.to_graph().unwrap().degrees(), g.degrees());
    }

    #[test]
    fn eigen_json_has_integer_entries() {
        let g = ThresholdGraph::from_string(&"001".parse().unwrap());
        let basis = EigenBasis::from_graph(&g);
        let json = EigenJson::from(&basis);
        assert_eq!(json.eigenvalues, vec![4, 1, 1, 0]);
        assert_eq!(json.vectors[0], vec![
            ExactNumber::Int(3),
            ExactNumber::Int(0),
            ExactNumber::Int(0),
            ExactNumber::Int(1)
        ]);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"V\":[[3,0,0,1]"));
    }

    #[test]
    fn control_matrix_json_round_trips() {
        let m = ControlMatrix::binary_from_columns(4, &[vec![0, 2], vec![3]]).unwrap();
        let json = ControlMatrixJson::from(&m);
        assert_eq!(json.kind, "binary");
        let back = json.to_control_matrix().unwrap();
        assert_eq!(back, m);

        let rational: ControlMatrixJson =
            serde_json::from_str(r#"{"kind": "general", "B": [[1, "1/2"], ["-3", 0]]}"#).unwrap();
        let b = rational.to_control_matrix().unwrap();
        assert_eq!(b[(0, 1)], BigRational::new(BigInt::one(), BigInt::from(2)));
        assert_eq!(b[(1, 0)], BigRational::from_integer((-3).into()));

        let bad: ControlMatrixJson =
            serde_json::from_str(r#"{"kind": "binary", "B": [[2]]}"#).unwrap();
        assert!(bad.to_control_matrix().is_err());
        let unknown: ControlMatrixJson =
            serde_json::from_str(r#"{"kind": "dense", "B": [[1]]}"#).unwrap();
        assert!(unknown.to_control_matrix().is_err());
    }

    #[test]
    fn report_json_shape() {
        let report = ControllabilityReport {
            controllable: false,
            witness: Some(vec![BigInt::from(1), BigInt::from(-1)]),
            failing_prefix: Some("001".parse().unwrap()),
        };
        let json = ReportJson::new(&report, Method::LocalRank.name(), (2, 2));
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(
            text,
            r#"{"controllable":false,"method":"local-rank","witness":[1,-1],"failing_substring":"001","min_controllers":{"binary":2,"terminal":2}}"#
        );
        let ok =
            ReportJson::new(&ControllabilityReport::controllable(), Method::Kalman.name(), (1, 1));
        let text = serde_json::to_string(&ok).unwrap();
        assert!(!text.contains("witness") && !text.contains("failing_substring"));
    }

    #[test]
    fn combined_json_shape() {
        let c = crate::antiregular::combine(8).unwrap();
        let json = CombinedJson::new(&c, Some(true)).unwrap();
        assert_eq!(json.k, 8);
        assert_eq!(json.bridge, [1, 6]);
        assert_eq!(json.stats, StatsJson { diameter: 4, max_degree: 4 });
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"certified_distinct\":true"));
        let silent = CombinedJson::new(&c, None).unwrap();
        assert!(!serde_json::to_string(&silent).unwrap().contains("certified_distinct"));
    }
}
