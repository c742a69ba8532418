//! Machine-readable verification reports.
//!
//! The JSON layout is versioned by [`SCHEMA_VERSION`]. Readers should ignore
//! fields they do not know; fields are only ever added within a version.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::verifier::{CheckResult, Status};

pub const SCHEMA_VERSION: u32 = 1;

/// A requested check that could not be run (unknown id, order too small, …).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunError {
    pub id: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Orders {
    /// Global `--order`, applied to every selected check.
    pub override_order: Option<i64>,
    /// Registry default of every selected, known check.
    pub defaults: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub orders: Orders,
    pub checks: Vec<CheckResult>,
    #[serde(default)]
    pub errors: Vec<RunError>,
    pub overall: Status,
    pub total_runtime_ms: f64,
}

impl ReportDocument {
    pub fn new(orders: Orders, checks: Vec<CheckResult>, errors: Vec<RunError>, total_runtime_ms: f64) -> ReportDocument {
        let overall = overall_status(&checks, &errors);
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            orders,
            checks,
            errors,
            overall,
            total_runtime_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<ReportDocument> {
        serde_json::from_str(text)
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json() + "\n")
    }
}

/// Pass iff nothing failed to run and every check that ran passed. Skipped
/// checks do not count against the run.
pub fn overall_status(checks: &[CheckResult], errors: &[RunError]) -> Status {
    if errors.is_empty() && checks.iter().all(|c| c.status != Status::Fail) {
        Status::Pass
    } else {
        Status::Fail
    }
}
