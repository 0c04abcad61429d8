use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    UnknownAtWindow(u32),
}

/// Outcome of one check. `runtime` is kept out of the JSON so that the same
/// config and seed always serialize to the same bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub datum: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    /// Negative control: the check is expected to fail.
    pub expect_failure: bool,
    pub witness: Value,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CheckReport {
    pub fn new(id: impl Into<String>, datum: impl Into<String>) -> Self {
        CheckReport {
            id: id.into(),
            datum: datum.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            expect_failure: false,
            witness: Value::Null,
            runtime: Duration::ZERO,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn with(mut self, passed: bool, witness: Value) -> Self {
        self.status = if passed { Status::Pass } else { Status::Fail };
        self.witness = witness;
        self
    }

    pub fn negative(mut self) -> Self {
        self.expect_failure = true;
        self
    }

    /// Pass for ordinary checks, Fail for negative controls.
    pub fn ok(&self) -> bool {
        match self.status {
            Status::Pass => !self.expect_failure,
            Status::Fail => self.expect_failure,
            Status::UnknownAtWindow(_) => false,
        }
    }

    pub fn summary_line(&self) -> String {
        let verdict = if self.ok() { "ok" } else { "FAILED" };
        let status = match self.status {
            Status::Pass => "pass".to_string(),
            Status::Fail => "fail".to_string(),
            Status::UnknownAtWindow(w) => format!("unknown at window {w}"),
        };
        let neg = if self.expect_failure { " (negative control)" } else { "" };
        format!(
            "{verdict:6} {:32} {:3} {status}{neg} [{:.2?}]",
            self.id, self.datum, self.runtime
        )
    }
}

/// Runs `f` and stores its wall time in the report.
pub fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let t = Instant::now();
    let mut r = f();
    r.runtime = t.elapsed();
    r
}
