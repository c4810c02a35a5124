use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Outside the hypothesis range; raw values are still recorded.
    NotApplicable,
    /// A resource cap was hit; the note names it.
    Skipped,
}

impl Verdict {
    pub fn is_failure(self) -> bool {
        self == Verdict::Fail
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "n/a",
            Verdict::Skipped => "skip",
        }
    }
}

/// Evidence for one check on one group. Serialises to one JSON object per
/// line; every field except `duration_us` is deterministic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub group: String,
    pub order: u64,
    pub params: BTreeMap<String, i64>,
    pub quantities: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub notes: Vec<String>,
    pub duration_us: u64,
}

impl TheoremReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<TheoremReport> {
        serde_json::from_str(line)
    }

    /// The report without its timing, for reproducibility comparisons.
    pub fn without_timing(&self) -> TheoremReport {
        TheoremReport {
            duration_us: 0,
            ..self.clone()
        }
    }
}

/// True when no report failed.
pub fn all_passed(reports: &[TheoremReport]) -> bool {
    reports.iter().all(|r| !r.verdict.is_failure())
}

fn params_text(r: &TheoremReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Fixed-width table, one row per report, followed by verdict counts.
pub fn summary_table(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    let gw = reports.iter().map(|r| r.group.len()).max().unwrap_or(5).max(5);
    let pw = reports.iter().map(|r| params_text(r).len()).max().unwrap_or(6).max(6);
    let _ = writeln!(
        out,
        "{:<7} {:<gw$} {:>7} {:<pw$} {:<7} {:>9}  detail",
        "check", "group", "order", "params", "verdict", "ms"
    );
    for r in reports {
        let detail = r
            .witness
            .as_deref()
            .or(r.notes.first().map(String::as_str))
            .unwrap_or("");
        let _ = writeln!(
            out,
            "{:<7} {:<gw$} {:>7} {:<pw$} {:<7} {:>9.1}  {}",
            r.theorem,
            r.group,
            r.order,
            params_text(r),
            r.verdict.label(),
            r.duration_us as f64 / 1000.0,
            detail
        );
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let _ = writeln!(
        out,
        "{} reports: {} pass, {} fail, {} n/a, {} skipped",
        reports.len(),
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::NotApplicable),
        count(Verdict::Skipped)
    );
    out
}
