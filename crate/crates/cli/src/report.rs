use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::input::DivisorInput;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// A computed value, or a marker such as `"not computed"` or `"error: …"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Field<T> {
    Value(T),
    Marker(String),
}

impl<T> Field<T> {
    pub fn not_computed() -> Self {
        Field::Marker("not computed".into())
    }

    pub fn error(code: &str) -> Self {
        Field::Marker(format!("error: {code}"))
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Field::Value(v) => Some(v),
            Field::Marker(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub tool_version: String,
    pub input: DivisorInput,
    pub flags: Vec<String>,
    /// `"ok"` or the code of the error that stopped the pipeline.
    pub status: String,
    pub cylinder: Field<CylinderReport>,
    pub profile: Field<ProfileReport>,
    pub ft1: Field<DeformationSummary>,
    pub lft1: Field<DeformationSummary>,
    pub h0: Field<usize>,
    pub bounds: Field<BoundsReport>,
    pub stages: Vec<StageReport>,
    /// Milliseconds per stage; excluded from golden comparisons.
    #[serde(default)]
    pub timings: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylinderReport {
    pub dropped: Vec<String>,
    pub variables: Vec<String>,
    pub reduced: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceWitness {
    pub field: String,
    pub trace: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub free: bool,
    pub weighted_homogeneous: bool,
    pub weights: Option<Vec<i64>>,
    pub degree: Option<i64>,
    pub linear: bool,
    /// Rows of the Saito matrix in the reduced variables.
    pub saito_matrix: Vec<Vec<String>>,
    pub saito_unit: String,
    pub koszul: Field<bool>,
    pub reductive: Option<bool>,
    pub trace_witness: Option<TraceWitness>,
    pub annihilator_dimension: Option<usize>,
    pub lie_algebra_dimension: Option<usize>,
    pub structure_constants_constant: Option<bool>,
    pub connection_conditions: Option<[bool; 2]>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationSummary {
    pub method: String,
    pub dimension: usize,
    pub degree: i64,
    /// Deformed equations `f′`, one per class.
    pub representatives: Vec<String>,
    /// Lifts `ψ(δᵢ)` of each class as field texts.
    pub lifts: Vec<Vec<String>>,
    pub cochain_dimensions: [usize; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub jacobian_degree_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub name: String,
    /// `"ok"`, `"skipped"` or `"error"`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl AnalysisReport {
    /// JSON text with the timings block removed.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timings.clear();
        serde_json::to_string_pretty(&r).expect("serializable")
    }
}
