//! Machine-readable check reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verified statement. `reference` names the claim being checked; failures carry a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub reference: String,
}

impl Check {
    pub fn new(name: impl Into<String>, reference: impl Into<String>, ok: bool, value: Value, witness: Option<Value>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            value,
            witness,
            reference: reference.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, reference: impl Into<String>, why: &str) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            value: Value::String(why.to_string()),
            witness: None,
            reference: reference.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub input_digest: String,
    pub checks: Vec<Check>,
    /// Wall-clock time, only filled when explicitly requested so reports stay byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: String::new(),
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Prefixes every check name, used when merging per-instance reports into a suite.
    pub fn prefixed(mut self, prefix: &str) -> Report {
        for c in &mut self.checks {
            c.name = format!("{prefix}/{}", c.name);
        }
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn sort_by_name(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn serialises_stably() {
        let mut r = Report::new();
        r.push(Check::new("b", "claim b", true, json!(3), None));
        r.push(Check::new("a", "claim a", false, json!(false), Some(json!([0, 1]))));
        r.sort_by_name();
        assert!(!r.all_pass());
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains(r#""status":"fail""#));
        assert!(!s.contains("timing"));
        assert_eq!(serde_json::from_str::<Report>(&s).unwrap(), r);
    }
}
