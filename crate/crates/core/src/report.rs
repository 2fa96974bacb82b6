//! Structured run reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::io::{JsonScalar, Number};
use crate::montecarlo::Estimate;

/// Outcome of one invariant check. Checks with `gate == false` are
/// comparisons against printed closed forms: they are reported but do not
/// fail a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub gate: bool,
    /// Largest residual, mismatch count or z-score, depending on the check.
    #[serde(serialize_with = "finite_or_string")]
    pub measured: f64,
    pub tolerance: f64,
    pub detail: String,
}

fn finite_or_string<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str(&x.to_string())
    }
}

impl Check {
    /// Exact check counting failures; passes when there are none.
    pub fn exact(name: &str, failures: usize, cases: usize) -> Check {
        Check {
            name: name.to_string(),
            passed: failures == 0,
            gate: true,
            measured: failures as f64,
            tolerance: 0.0,
            detail: format!("{failures} of {cases} cases failed"),
        }
    }

    /// Passes when `measured <= tolerance`.
    pub fn within(name: &str, measured: f64, tolerance: f64, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            passed: measured <= tolerance,
            gate: true,
            measured,
            tolerance,
            detail: detail.into(),
        }
    }

    /// A check that failed before it could measure anything.
    pub fn errored(name: &str, error: impl std::fmt::Display) -> Check {
        Check {
            name: name.to_string(),
            passed: false,
            gate: true,
            measured: f64::INFINITY,
            tolerance: 0.0,
            detail: format!("error: {error}"),
        }
    }

    pub fn advisory(mut self) -> Check {
        self.gate = false;
        self
    }
}

/// A printed formula that disagrees with what the library computes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub name: String,
    pub printed: String,
    pub implemented: String,
    pub evidence: String,
}

/// Checks and discrepancies of one verification suite.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Suite {
    pub checks: Vec<Check>,
    pub discrepancies: Vec<Discrepancy>,
}

impl Suite {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Suite) {
        self.checks.extend(other.checks);
        self.discrepancies.extend(other.discrepancies);
    }

    /// `true` when every gating check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.gate)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// One row of a coefficient table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientRow {
    pub key: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mask: Option<u32>,
    pub re: Number,
    pub im: Number,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr_re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr_im: Option<f64>,
}

impl CoefficientRow {
    pub fn new<S: JsonScalar>(key: Value, mask: Option<u32>, c: &S) -> Self {
        let (re, im) = c.to_parts();
        CoefficientRow {
            key,
            mask,
            re,
            im,
            stderr_re: None,
            stderr_im: None,
        }
    }

    pub fn estimate(key: Value, mask: Option<u32>, e: &Estimate) -> Self {
        CoefficientRow {
            stderr_re: Some(e.stderr_re),
            stderr_im: Some(e.stderr_im),
            ..CoefficientRow::new(key, mask, &e.mean)
        }
    }
}

/// Record of a CLI run. Apart from `wall_time_ms`, which is only present
/// when requested, identical jobs give byte-identical reports.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct TransformReport {
    pub command: String,
    pub space: Option<String>,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub parameters: BTreeMap<String, Value>,
    pub coefficients: Vec<CoefficientRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    pub residuals: BTreeMap<String, f64>,
    pub checks: Vec<Check>,
    pub discrepancies: Vec<Discrepancy>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl TransformReport {
    pub fn new(command: &str, space: Option<&str>) -> Self {
        TransformReport {
            command: command.to_string(),
            space: space.map(str::to_string),
            version: env!("CARGO_PKG_VERSION").to_string(),
            passed: true,
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn add_suite(&mut self, suite: Suite) {
        self.checks.extend(suite.checks);
        self.discrepancies.extend(suite.discrepancies);
        self.passed = self.checks.iter().all(|c| c.passed || !c.gate);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn advisory_failures_do_not_fail_a_suite() {
        let mut suite = Suite::default();
        suite.push(Check::exact("a", 0, 3));
        suite.push(Check::within("b", 2.0, 1.0, "").advisory());
        assert!(suite.passed());
        suite.push(Check::within("c", 2.0, 1.0, ""));
        assert!(!suite.passed());
        let mut report = TransformReport::new("verify", Some("fock"));
        report.add_suite(suite);
        assert!(!report.passed);
        assert!(report.to_json().contains("\"name\": \"c\""));
    }

    #[test]
    fn infinite_measurements_serialize() {
        let c = Check::errored("x", "boom");
        assert!(serde_json::to_string(&c).unwrap().contains("\"inf\""));
    }
}
