//! Reporting types shared by every validator and check in the crate.
//!
//! Validation is exhaustive: a report lists every violated axiom
//! instance, never just the first. Structural errors (dangling
//! references, shape mismatches) are reported before law errors, and a
//! report with structural errors carries no law errors because the law
//! checks were not run.

use serde::{Deserialize, Serialize};

/// One violation found by a validator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Structural,
    Law,
}

/// Exhaustive validation output: empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn structural(&mut self, message: impl Into<String>) {
        self.violations.push(Violation { kind: ViolationKind::Structural, message: message.into() });
    }

    pub fn law(&mut self, message: impl Into<String>) {
        self.violations.push(Violation { kind: ViolationKind::Law, message: message.into() });
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_structural_errors(&self) -> bool {
        self.violations.iter().any(|v| v.kind == ViolationKind::Structural)
    }

    pub fn messages(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.message.as_str()).collect()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Prefix every message, for validators that delegate to sub-validators.
    pub fn merge_under(&mut self, prefix: &str, other: ValidationReport) {
        for v in other.violations {
            self.violations.push(Violation {
                kind: v.kind,
                message: format!("{prefix}: {}", v.message),
            });
        }
    }
}

/// Outcome of a single named check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// A named check result with witness instances for failures (or, for
/// inconclusive results, a note on what was truncated).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub check: String,
    pub status: Status,
    pub witnesses: Vec<String>,
}

impl Finding {
    pub fn pass(check: impl Into<String>) -> Self {
        Finding { check: check.into(), status: Status::Pass, witnesses: Vec::new() }
    }

    pub fn fail(check: impl Into<String>, witnesses: Vec<String>) -> Self {
        Finding { check: check.into(), status: Status::Fail, witnesses }
    }

    pub fn inconclusive(check: impl Into<String>, note: impl Into<String>) -> Self {
        Finding { check: check.into(), status: Status::Inconclusive, witnesses: vec![note.into()] }
    }

    pub fn from_violations(check: impl Into<String>, witnesses: Vec<String>) -> Self {
        if witnesses.is_empty() {
            Finding::pass(check)
        } else {
            Finding::fail(check, witnesses)
        }
    }
}

/// A batch of findings, merged deterministically by check id.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, finding: Finding) {
        self.findings.push(finding);
    }

    pub fn extend(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }

    /// Overall verdict: fail if any finding fails, else inconclusive if
    /// any is inconclusive, else pass. Inconclusive never silently passes.
    pub fn overall(&self) -> Status {
        if self.findings.iter().any(|f| f.status == Status::Fail) {
            Status::Fail
        } else if self.findings.iter().any(|f| f.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    /// Overall verdict over required checks only: findings whose check
    /// id starts with `optional-` are informational and never gate it.
    pub fn overall_required(&self) -> Status {
        let required = Report {
            findings: self
                .findings
                .iter()
                .filter(|f| !f.check.starts_with("optional-"))
                .cloned()
                .collect(),
        };
        required.overall()
    }

    pub fn sort_by_check(&mut self) {
        self.findings.sort_by(|a, b| a.check.cmp(&b.check));
    }

    pub fn finding(&self, check: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.check == check)
    }
}
