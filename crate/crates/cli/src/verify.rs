//! `verify`: regression, corpus and calibration suites.

use cheatbot_core::engine::BodyguardOptions;
use cheatbot_core::suite::{self, SuiteConfig, SuiteResult};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paper,
    Corpus,
    CalibrateBodyguard,
}

pub fn run(which: Suite, cfg: &SuiteConfig) -> SuiteResult {
    match which {
        Suite::Paper => suite::regression_suite(cfg),
        Suite::Corpus => suite::corpus_suite(cfg),
        Suite::CalibrateBodyguard => suite::calibrate_bodyguard(cfg),
    }
}

/// Human-readable summary, one line per check.
pub fn text(result: &SuiteResult, verbose: bool) -> String {
    let mut out = String::new();
    for r in &result.results {
        out.push_str(&r.line());
        out.push('\n');
        if verbose || !r.passed {
            for d in r.detail.iter().skip(1) {
                out.push_str(&format!("      {d}\n"));
            }
        }
    }
    if result.suite == "calibrate-bodyguard" {
        let passing: Vec<String> = BodyguardOptions::all()
            .iter()
            .zip(&result.results)
            .filter(|(_, r)| r.passed)
            .map(|(o, _)| format!("co_location={} guards_first={}", o.co_location, o.guards_first))
            .collect();
        let default = BodyguardOptions::default();
        out.push_str(&format!(
            "default: co_location={} guards_first={}\npassing option sets: {}\n",
            default.co_location,
            default.guards_first,
            if passing.is_empty() { "none".to_string() } else { passing.join("; ") }
        ));
    }
    out.push_str(&format!("{}: {} passed, {} failed\n", result.suite, result.passed, result.failed));
    out
}

/// Whether the suite counts as passing for the exit code.
pub fn succeeded(result: &SuiteResult) -> bool {
    if result.suite == "calibrate-bodyguard" {
        result.passed > 0
    } else {
        result.failed == 0
    }
}
