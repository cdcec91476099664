//! Machine-readable report types. Serialization is plain serde_json with
//! struct-ordered fields and no timestamps, so identical inputs produce
//! byte-identical reports.

use serde::Serialize;

use qteleport::matrix::{ComplexMatrix, ComplexVector};
use qteleport::sweep::SweepReport;

/// Complex values rendered as `[re, im]` pairs, matrices row-major.
pub type PairList = Vec<[f64; 2]>;

pub fn matrix_pairs(m: &ComplexMatrix) -> PairList {
    m.data().iter().map(|z| [z.re, z.im]).collect()
}

pub fn vector_pairs(v: &ComplexVector) -> PairList {
    v.data().iter().map(|z| [z.re, z.im]).collect()
}

/// Per-outcome status: every field below is present in every report, with
/// `null` standing in when an error path made a value unavailable.
#[derive(Debug, Serialize)]
pub struct AnalyzeOutcome {
    pub label: String,
    pub status: String,
    pub error: Option<String>,
    pub rho: Option<f64>,
    pub singular_values: Vec<f64>,
    pub faithful: Option<bool>,
    pub x: Option<PairList>,
    pub correction: Option<PairList>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub command: &'static str,
    pub dim: usize,
    pub tolerance: f64,
    pub normalized: bool,
    pub classification: String,
    pub exit_code: i32,
    pub outcomes: Vec<AnalyzeOutcome>,
}

#[derive(Debug, Serialize)]
pub struct TeleportOutcomeReport {
    pub label: String,
    pub status: String,
    pub error: Option<String>,
    pub rho: Option<f64>,
    pub faithful: Option<bool>,
    pub outcome_probability: Option<f64>,
    pub success_probability: Option<f64>,
    pub fidelity: Option<f64>,
    pub corrected_state: Option<PairList>,
    /// Largest elementwise gap between the closed-form receiver vector and
    /// the state-vector oracle projection; `null` above the oracle cap.
    pub oracle_residual: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct TeleportReport {
    pub command: &'static str,
    pub dim: usize,
    pub tolerance: f64,
    pub normalized: bool,
    pub classification: String,
    pub exit_code: i32,
    pub outcomes: Vec<TeleportOutcomeReport>,
}

#[derive(Debug, Serialize)]
pub struct TableRowReport {
    pub a_index: usize,
    pub b_index: usize,
    pub a: PairList,
    pub b: PairList,
    pub ba: PairList,
    pub ba_t: PairList,
    pub u: PairList,
    pub sign_matches_reference: bool,
}

#[derive(Debug, Serialize)]
pub struct TableReport {
    pub command: &'static str,
    pub rows: Vec<TableRowReport>,
    pub sign_deviations: usize,
}

#[derive(Debug, Serialize)]
pub struct SweepReportJson {
    pub command: &'static str,
    pub report: SweepReport,
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports always serialize");
    text.push('\n');
    text
}
