//! Check records and report rendering (text, JSON, CSV).

use serde::Serialize;
use std::fmt;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-budget")]
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    #[serde(rename = "check-id")]
    pub check_id: String,
    #[serde(rename = "graph-id")]
    pub graph_id: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    #[serde(rename = "elapsed-ms")]
    pub elapsed_ms: u64,
}

impl CheckRecord {
    pub fn eval<T: PartialEq + fmt::Debug>(
        check_id: &str,
        graph_id: &str,
        expected: T,
        actual: T,
        started: Instant,
    ) -> CheckRecord {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckRecord {
            check_id: check_id.to_string(),
            graph_id: graph_id.to_string(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            status,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn assert_true(
        check_id: &str,
        graph_id: &str,
        expected: &str,
        ok: bool,
        detail: &str,
        started: Instant,
    ) -> CheckRecord {
        CheckRecord {
            check_id: check_id.to_string(),
            graph_id: graph_id.to_string(),
            expected: expected.to_string(),
            actual: detail.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn skipped(
        check_id: &str,
        graph_id: &str,
        expected: &str,
        detail: &str,
        started: Instant,
    ) -> CheckRecord {
        CheckRecord {
            check_id: check_id.to_string(),
            graph_id: graph_id.to_string(),
            expected: expected.to_string(),
            actual: detail.to_string(),
            status: Status::SkippedBudget,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

#[derive(Serialize)]
pub struct VerificationReport {
    pub version: u32,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| {
            a.check_id
                .cmp(&b.check_id)
                .then_with(|| a.graph_id.cmp(&b.graph_id))
        });
        VerificationReport { version: 1, checks }
    }

    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check-id,graph-id,expected,actual,status,elapsed-ms\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                csv_field(&c.check_id),
                csv_field(&c.graph_id),
                csv_field(&c.expected),
                csv_field(&c.actual),
                c.status,
                c.elapsed_ms
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<7} {:<34} {:<28} expected={} actual={} ({} ms)\n",
                c.status.to_string(),
                c.check_id,
                c.graph_id,
                c.expected,
                c.actual,
                c.elapsed_ms
            ));
        }
        let total = self.checks.len();
        let failed = self.failed();
        let skipped = self
            .checks
            .iter()
            .filter(|c| c.status == Status::SkippedBudget)
            .count();
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} skipped-budget\n",
            total,
            total - failed - skipped,
            failed,
            skipped
        ));
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
