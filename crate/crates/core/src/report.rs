//! Machine-readable certification reports with stable field order, so two
//! runs with the same config and seed serialize byte-identically.

use crate::metric::MetricFlags;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StepStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "inconclusive")]
    Inconclusive,
    #[serde(rename = "skipped")]
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Detail {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub step: String,
    pub status: StepStatus,
    pub details: Vec<Detail>,
    pub witness: Option<String>,
}

impl StepReport {
    pub fn pass(step: &str) -> StepReport {
        StepReport {
            step: step.to_string(),
            status: StepStatus::Pass,
            details: Vec::new(),
            witness: None,
        }
    }

    pub fn fail(step: &str, witness: impl Into<String>) -> StepReport {
        StepReport {
            step: step.to_string(),
            status: StepStatus::Fail,
            details: Vec::new(),
            witness: Some(witness.into()),
        }
    }

    pub fn with(mut self, name: &str, value: impl ToString) -> StepReport {
        self.details.push(Detail {
            name: name.to_string(),
            value: value.to_string(),
        });
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every constructed claim was discharged: the output is a certified
    /// group-invariant proper compatible metric on the scenario space.
    #[serde(rename = "certified-witness")]
    CertifiedWitness,
    #[serde(rename = "failed")]
    Failed,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub schema: u32,
    pub scenario: String,
    pub seed: u64,
    pub window_size: usize,
    pub steps: Vec<StepReport>,
    pub discharged: MetricFlags,
    pub verdict: Verdict,
    /// Optional exact value table of the final metric over the window:
    /// (x, y, value) triples as strings.
    pub value_table: Option<Vec<[String; 3]>>,
}

impl CertificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub module: String,
    pub property: String,
    pub status: StepStatus,
    pub details: Vec<Detail>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySuiteReport {
    pub schema: u32,
    pub scenario: String,
    pub seed: u64,
    pub properties: Vec<PropertyReport>,
    pub passed: bool,
}

impl VerifySuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
