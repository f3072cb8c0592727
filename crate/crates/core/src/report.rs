//! Structured pass/fail records (`og6report/v1`).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::hodge::HodgeClass;

pub const REPORT_FORMAT: &str = "og6report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked identity. `residual` is `lhs - rhs` for class comparisons
/// and empty otherwise, or when the check passes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: HodgeClass,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport {
            format: REPORT_FORMAT.to_string(),
            checks: Vec::new(),
        }
    }

    /// Compares two classes as full bigraded tables.
    pub fn check_classes(&mut self, id: impl Into<String>, lhs: &HodgeClass, rhs: &HodgeClass) -> bool {
        let residual = lhs - rhs;
        let pass = residual.is_empty();
        self.checks.push(Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs: lhs.to_json_value(),
            rhs: rhs.to_json_value(),
            residual,
        });
        pass
    }

    pub fn check_values(&mut self, id: impl Into<String>, lhs: impl Into<Value>, rhs: impl Into<Value>) -> bool {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let pass = lhs == rhs;
        self.record(id, pass, lhs, rhs)
    }

    /// A check whose outcome is decided by the caller.
    pub fn record(&mut self, id: impl Into<String>, pass: bool, lhs: impl Into<Value>, rhs: impl Into<Value>) -> bool {
        self.checks.push(Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs: lhs.into(),
            rhs: rhs.into(),
            residual: HodgeClass::zero(),
        });
        pass
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
