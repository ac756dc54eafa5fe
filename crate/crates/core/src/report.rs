//! Verification outcomes and the campaign report.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::group::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Result of one check on one group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub detail: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn pass(detail: Value) -> Self {
        Outcome {
            status: Status::Pass,
            detail,
            witness: None,
        }
    }

    pub fn fail(detail: Value, witness: Value) -> Self {
        Outcome {
            status: Status::Fail,
            detail,
            witness: Some(witness),
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::Skipped,
            detail: Value::String(reason.into()),
            witness: None,
        }
    }

    /// Pass or fail on `ok`; the witness is only built on failure.
    pub fn check(ok: bool, detail: Value, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass(detail)
        } else {
            Self::fail(detail, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines sub-checks: fails if any fails, skipped only if all are skipped.
    pub fn all(parts: Vec<(&str, Outcome)>) -> Self {
        let mut detail = serde_json::Map::new();
        let mut failures = serde_json::Map::new();
        let mut any_pass = false;
        for (name, o) in parts {
            match o.status {
                Status::Fail => {
                    failures.insert(name.to_string(), o.witness.clone().unwrap_or(Value::Null));
                }
                Status::Pass => any_pass = true,
                Status::Skipped => {}
            }
            detail.insert(name.to_string(), o.detail);
        }
        if !failures.is_empty() {
            Self::fail(Value::Object(detail), Value::Object(failures))
        } else if any_pass {
            Self::pass(Value::Object(detail))
        } else {
            Outcome {
                status: Status::Skipped,
                detail: Value::Object(detail),
                witness: None,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub check_id: String,
    pub family: Family,
    pub n: u32,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    pub generated_at_unix: u64,
    /// Wall time per entry, keyed `check_id/family/n`.
    pub elapsed_ms: BTreeMap<String, f64>,
}

/// On-disk layout: volatile data in `header`, reproducible data in `report`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub header: ReportHeader,
    pub report: VerificationReport,
}

impl VerificationReport {
    pub fn new(seed: u64) -> Self {
        VerificationReport {
            seed,
            entries: Vec::new(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries
            .iter()
            .filter(|e| e.outcome.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries
            .iter()
            .filter(|e| e.outcome.status == status)
            .count()
    }

    pub fn to_file(&self) -> ReportFile {
        let generated_at_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let elapsed_ms = self
            .entries
            .iter()
            .map(|e| {
                (
                    format!("{}/{}/{}", e.check_id, e.family, e.n),
                    e.elapsed.as_secs_f64() * 1e3,
                )
            })
            .collect();
        ReportFile {
            header: ReportHeader {
                tool: env!("CARGO_PKG_NAME").to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                generated_at_unix,
                elapsed_ms,
            },
            report: self.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "seed {}", self.seed);
        let mut current = "";
        for e in &self.entries {
            if e.check_id != current {
                current = &e.check_id;
                let _ = writeln!(out, "\n[{current}]");
            }
            let status = match e.outcome.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let _ = write!(out, "  {:<13} n={} {:<4}", e.family.to_string(), e.n, status);
            match (&e.outcome.witness, &e.outcome.detail) {
                (Some(w), _) => {
                    let _ = write!(out, " witness: {w}");
                }
                (None, Value::String(s)) => {
                    let _ = write!(out, " ({s})");
                }
                _ => {}
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "\n{} pass, {} fail, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn combine_outcomes() {
        let ok = Outcome::all(vec![("a", Outcome::pass(json!(1))), ("b", Outcome::skipped("x"))]);
        assert!(ok.passed());
        let bad = Outcome::all(vec![
            ("a", Outcome::pass(json!(1))),
            ("b", Outcome::fail(json!(2), json!("w"))),
        ]);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.witness, Some(json!({"b": "w"})));
        let skipped = Outcome::all(vec![("a", Outcome::skipped("x"))]);
        assert_eq!(skipped.status, Status::Skipped);
    }

    #[test]
    fn entry_json_is_flat() {
        let e = Entry {
            check_id: "x".into(),
            family: Family::Quaternion,
            n: 3,
            outcome: Outcome::pass(json!({"k": 1})),
            elapsed: Duration::from_millis(5),
        };
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v, json!({"check_id": "x", "family": "quaternion", "n": 3, "status": "pass", "detail": {"k": 1}}));
    }
}
