use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::analysis::classify_families;
use crate::error::Result;
use crate::sieve::SolveReport;

pub const SCHEMA_VERSION: u32 = 1;

/// Serialized form of a solve. Big integers are decimal strings; trits are
/// plain JSON integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub n: u32,
    pub j_hat: u64,
    pub j_tilde: u64,
    pub j_full: String,
    pub families: Vec<String>,
    pub solutions: Vec<Vec<i8>>,
    pub chain: Vec<String>,
    pub step_profile: Vec<u64>,
    pub elapsed_ms: u64,
}

impl ResultRecord {
    pub fn from_report(report: &SolveReport) -> Self {
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            n: report.n,
            j_hat: report.j_hat,
            j_tilde: report.j_tilde,
            j_full: report.j_full.to_string(),
            families: classify_families(report.n as u64)
                .into_iter()
                .map(|t| t.name().to_string())
                .collect(),
            solutions: report
                .solutions
                .iter()
                .map(|s| s.entries().to_vec())
                .collect(),
            chain: report.chain.moduli().iter().map(|d| d.to_string()).collect(),
            step_profile: report.step_profile.clone(),
            elapsed_ms: report.elapsed.as_millis() as u64,
        }
    }

    pub fn j_full_value(&self) -> Option<BigInt> {
        self.j_full.parse().ok()
    }

    pub fn to_json_line(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
