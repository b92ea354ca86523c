use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An inconsistency in the stated formulas, resolved by a documented choice.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        })
    }
}

/// Where a check failed: the generator word of the point and the values seen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub point: Vec<String>,
    pub values: Vec<(String, String)>,
}

impl Counterexample {
    pub fn new(point: &[String]) -> Self {
        Counterexample { point: point.to_vec(), values: Vec::new() }
    }

    pub fn value(mut self, name: impl Into<String>, v: impl fmt::Display) -> Self {
        self.values.push((name.into(), v.to_string()));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    /// The claim being checked, in words.
    pub claim: String,
    pub status: Status,
    pub trials: usize,
    pub details: String,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn pass(id: impl Into<String>, claim: impl Into<String>, trials: usize, details: impl Into<String>) -> Self {
        CheckReport {
            check_id: id.into(),
            claim: claim.into(),
            status: Status::Pass,
            trials,
            details: details.into(),
            counterexample: None,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        claim: impl Into<String>,
        trials: usize,
        details: impl Into<String>,
        cx: Counterexample,
    ) -> Self {
        CheckReport {
            check_id: id.into(),
            claim: claim.into(),
            status: Status::Fail,
            trials,
            details: details.into(),
            counterexample: Some(cx),
        }
    }

    pub fn flagged(id: impl Into<String>, claim: impl Into<String>, details: impl Into<String>) -> Self {
        CheckReport {
            check_id: id.into(),
            claim: claim.into(),
            status: Status::Flagged,
            trials: 0,
            details: details.into(),
            counterexample: None,
        }
    }

    /// Pass or fail on a boolean outcome; a failure carries `cx` (or an empty point).
    pub fn outcome(
        id: impl Into<String>,
        claim: impl Into<String>,
        ok: bool,
        details: impl Into<String>,
        cx: Option<Counterexample>,
    ) -> Self {
        if ok {
            CheckReport::pass(id, claim, 1, details)
        } else {
            CheckReport::fail(id, claim, 1, details, cx.unwrap_or_else(|| Counterexample::new(&[])))
        }
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    /// Prefix the id, e.g. `"case1."`.
    pub fn scoped(mut self, prefix: &str) -> Self {
        self.check_id = format!("{prefix}{}", self.check_id);
        self
    }
}

/// Canonical order: by check id.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
}

pub fn any_failure(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}

pub fn to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// One line per check: `status  id  trials  details`.
pub fn to_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{:<8}{}  [{} trials]  {}\n", r.status, r.check_id, r.trials, r.details));
        if let Some(cx) = &r.counterexample {
            if !cx.point.is_empty() {
                out.push_str(&format!("        at {}\n", cx.point.join("·")));
            }
            for (k, v) in &cx.values {
                out.push_str(&format!("        {k} = {v}\n"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_serialized() {
        let mut rs = vec![
            CheckReport::flagged("b", "claim b", "text"),
            CheckReport::fail("a", "claim a", 3, "mismatch", Counterexample::new(&["x1(2)".into()]).value("lhs", 4)),
        ];
        sort_reports(&mut rs);
        assert_eq!(rs[0].check_id, "a");
        assert!(any_failure(&rs));
        let j = to_json(&rs);
        assert!(j.contains("\"status\": \"fail\""));
        let back: Vec<CheckReport> = serde_json::from_str(&j).unwrap();
        assert_eq!(back, rs);
        assert!(to_text(&rs).contains("x1(2)"));
    }
}
