//! Verification suites: the regression criteria, exhaustive corpus
//! properties and bodyguard rule calibration. Shared by the CLI and the
//! acceptance tests.

mod calibrate;
mod corpus;
mod criteria;

pub use calibrate::{calibrate_bodyguard, calibration_checks, CalibrationRow};
pub use corpus::corpus_suite;
pub use criteria::*;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::graph::Graph;
use crate::solver::{self, SolveError, SolveOptions, Variant};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Transition budget per solve.
    pub budget: u64,
    /// Largest corpus graph order.
    pub max_n: usize,
    /// Run checks that take much longer than the rest.
    pub long: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            budget: 4_000_000_000,
            max_n: 7,
            long: false,
        }
    }
}

impl SuiteConfig {
    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions { budget: self.budget }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: Vec<String>,
    pub values: Map<String, Value>,
    pub elapsed_ms: u64,
}

impl CriterionResult {
    /// One summary line.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let first = self.detail.first().map(String::as_str).unwrap_or("");
        format!("[{status}] {:>2} {}: {first} ({} ms)", self.id, self.name, self.elapsed_ms)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub schema: u32,
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub results: Vec<CriterionResult>,
}

impl SuiteResult {
    pub fn new(suite: &str, results: Vec<CriterionResult>) -> Self {
        let passed = results.iter().filter(|r| r.passed).count();
        SuiteResult {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            failed: results.len() - passed,
            passed,
            results,
        }
    }
}

/// Collects findings while a check runs.
pub(crate) struct Report {
    pub detail: Vec<String>,
    pub values: Map<String, Value>,
}

impl Report {
    pub fn note(&mut self, line: impl Into<String>) {
        self.detail.push(line.into());
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }
}

/// Runs `check`; an error counts as a failure with the error as detail.
pub(crate) fn run(id: u32, name: &str, check: impl FnOnce(&mut Report) -> Result<bool, SolveError>) -> CriterionResult {
    let start = Instant::now();
    let mut report = Report {
        detail: Vec::new(),
        values: Map::new(),
    };
    let passed = match check(&mut report) {
        Ok(p) => p,
        Err(e) => {
            report.detail.insert(0, format!("error: {e}"));
            false
        }
    };
    CriterionResult {
        id,
        name: name.to_string(),
        passed,
        detail: report.detail,
        values: report.values,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

pub(crate) fn cop_win(g: &Graph, k: usize, cfg: &SuiteConfig) -> Result<bool, SolveError> {
    Ok(solver::solve_pursuit(g, k, Variant::Cheating, &cfg.solve_options())?.cop_win)
}

pub(crate) fn ccr(g: &Graph, cfg: &SuiteConfig) -> Result<usize, SolveError> {
    Ok(solver::cheating_robot_number(g, &cfg.solve_options())?.0.value)
}

pub(crate) fn sigma(g: &Graph, cfg: &SuiteConfig) -> Result<usize, SolveError> {
    Ok(solver::surrounding_number(g, &cfg.solve_options())?.0.value)
}

pub(crate) fn pcr(g: &Graph, ccr: usize, cfg: &SuiteConfig) -> Result<usize, SolveError> {
    Ok(solver::push_number(g, ccr, &cfg.solve_options())?.0.value)
}
