//! Machine-readable campaign reports.

use serde::{Deserialize, Serialize};

/// One counterexample, with enough of the inputs to replay the check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationRecord {
    /// Point texts (and, where relevant, a `word:`-prefixed generator word).
    pub inputs: Vec<String>,
    /// Observed values, suite-specific.
    pub values: Vec<f64>,
    /// Signed slack of the violated bound.
    pub slack: f64,
}

/// Per-suite campaign outcome. `violations` is empty exactly when the suite
/// passed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CampaignReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub violations: Vec<ViolationRecord>,
    pub max_slack: f64,
    pub min_slack: f64,
    pub rejections: usize,
    pub elapsed_ms: u64,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One CSV row per evaluated sample.
#[derive(Debug, Clone)]
pub struct SampleRow {
    pub suite: &'static str,
    pub index: usize,
    pub x1: f64,
    pub x2: f64,
    pub slack: f64,
}

pub fn reports_to_json(reports: &[CampaignReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn rows_to_csv(rows: &[SampleRow]) -> String {
    let mut out = String::from("suite,index,x1,x2,slack\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.suite, r.index, r.x1, r.x2, r.slack
        ));
    }
    out
}
