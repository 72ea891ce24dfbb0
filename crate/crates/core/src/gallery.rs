//! Example gallery: every cataloged value and inequality suite,
//! grouped by acceptance criterion, with one PASS/FAIL line per check.

use std::time::{Duration, Instant};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub abs_err: f64,
    pub passed: bool,
}

impl Check {
    pub fn numeric(name: impl Into<String>, expected: f64, actual: f64, tol: f64) -> Self {
        let err = (expected - actual).abs();
        Check {
            name: name.into(),
            expected: format!("{expected:.17e}"),
            actual: format!("{actual:.17e}"),
            abs_err: err,
            passed: err <= tol,
        }
    }

    pub fn boolean(name: impl Into<String>, expected: bool, actual: bool) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            abs_err: if expected == actual { 0.0 } else { f64::NAN },
            passed: expected == actual,
        }
    }

    pub fn predicate(
        name: impl Into<String>,
        description: impl Into<String>,
        passed: bool,
    ) -> Self {
        Check {
            name: name.into(),
            expected: description.into(),
            actual: if passed {
                "holds".into()
            } else {
                "violated".into()
            },
            abs_err: if passed { 0.0 } else { f64::NAN },
            passed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.elapsed <= self.budget
    }
}

pub(crate) fn outcome(
    id: u8,
    title: &str,
    budget_secs: f64,
    start: Instant,
    checks: Vec<Check>,
) -> CriterionOutcome {
    CriterionOutcome {
        id,
        title: title.to_string(),
        checks,
        elapsed: start.elapsed(),
        budget: Duration::from_secs_f64(budget_secs),
    }
}

mod criteria;
pub use criteria::{run_all, run_criterion};
