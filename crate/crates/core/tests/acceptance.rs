//! One test per acceptance criterion. Each prints a PASS/FAIL line to
//! standard error, followed by any detail lines.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are run in full and print FAIL;
//! the test then asserts that they still fail, so an unexpected change in
//! either direction is caught.

use std::io::{self, Write};

use cheatbot_core::suite::{self, CriterionResult, SuiteConfig};

/// Transition budget per solve.
const BUDGET: u64 = 4_000_000_000;
/// Largest order in the exhaustive corpus.
const CORPUS_MAX_N: usize = 7;
/// Stated values that the exact solvers refute.
const KNOWN_UNATTAINABLE: [u32; 2] = [4, 8];

fn config() -> SuiteConfig {
    SuiteConfig {
        budget: BUDGET,
        max_n: CORPUS_MAX_N,
        long: false,
    }
}

fn check(id: u32, criterion: fn(&SuiteConfig) -> CriterionResult) {
    let r = criterion(&config());
    assert_eq!(r.id, id);
    // written to the stream directly so the line survives output capture
    let mut err = io::stderr().lock();
    writeln!(err, "{}", r.line()).unwrap();
    for d in r.detail.iter().skip(1) {
        writeln!(err, "      {d}").unwrap();
    }
    drop(err);
    let expected = !KNOWN_UNATTAINABLE.contains(&id);
    assert_eq!(r.passed, expected, "criterion {id}: {:?}", r.detail);
}

#[test]
fn criterion_01_tree_characterization() {
    check(1, suite::tree_characterization);
}

#[test]
fn criterion_02_cycles() {
    check(2, suite::cycles);
}

#[test]
fn criterion_03_complete_and_multipartite() {
    check(3, suite::complete_and_multipartite);
}

#[test]
fn criterion_04_girth_witness() {
    check(4, suite::girth_witness);
}

#[test]
fn criterion_05_subgraph_counterexample() {
    check(5, suite::subgraph_counterexample);
}

#[test]
fn criterion_06_push_witnesses() {
    check(6, suite::push_witnesses);
}

#[test]
fn criterion_07_inequality_chain() {
    check(7, suite::inequality_chain);
}

#[test]
fn criterion_08_bodyguard_calibration() {
    check(8, suite::bodyguard_calibration);
}

#[test]
fn criterion_09_product_equalities() {
    check(9, suite::product_equalities);
}

#[test]
fn criterion_10_grid_bounds() {
    check(10, suite::grid_bounds);
}

#[test]
fn criterion_11_cartesian_bound() {
    check(11, suite::cartesian_bound);
}

#[test]
fn criterion_12_family_samples() {
    check(12, suite::family_samples);
}

#[test]
fn criterion_13_icosahedron_lower_bound() {
    check(13, suite::icosahedron_lower_bound);
}

#[test]
fn criterion_14_fixed_point_equivalence() {
    check(14, suite::psi_equivalence);
}

#[test]
fn criterion_15_ds_structure() {
    check(15, suite::ds_structure);
}
