//! Bodyguard rule calibration against known bodyguard numbers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run, SuiteConfig, SuiteResult};
use crate::engine::BodyguardOptions;
use crate::fixtures;
use crate::graph::{product, Graph, GraphFamily, ProductKind};
use crate::solver::{bodyguard_number, SolveError};

pub const KING_EXPECTED: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationRow {
    pub options: BodyguardOptions,
    /// `(n, B(C_n))` for `n = 3..9`.
    pub cycle_values: Vec<(usize, usize)>,
    pub cycles_ok: bool,
    /// Trees on 3..8 vertices whose bodyguard number is their leaf count.
    pub trees_matching: usize,
    pub trees_total: usize,
    pub trees_ok: bool,
    pub king_value: usize,
    pub king_ok: bool,
    pub mismatches: Vec<String>,
}

fn b(g: &Graph, options: BodyguardOptions, cfg: &SuiteConfig) -> Result<usize, SolveError> {
    Ok(bodyguard_number(g, options, &cfg.solve_options())?.0.value)
}

pub fn calibration_checks(options: BodyguardOptions, cfg: &SuiteConfig) -> Result<CalibrationRow, SolveError> {
    let mut mismatches = Vec::new();
    let mut cycle_values = Vec::new();
    for n in 3..=9 {
        let v = b(&GraphFamily::Cycle(n).generate().expect("n >= 3"), options, cfg)?;
        let want = if n <= 5 { 2 } else { 3 };
        if v != want {
            mismatches.push(format!("B(C{n}) = {v}, expected {want}"));
        }
        cycle_values.push((n, v));
    }
    let cycles_ok = mismatches.is_empty();

    let trees: Vec<Graph> = fixtures::trees(8).into_iter().filter(|t| t.n() >= 3).collect();
    let tree_values: Result<Vec<usize>, SolveError> = trees.par_iter().map(|t| b(t, options, cfg)).collect();
    let mut trees_matching = 0;
    for (t, v) in trees.iter().zip(tree_values?) {
        let leaves = (0..t.n()).filter(|&x| t.degree(x) == 1).count();
        if v == leaves {
            trees_matching += 1;
        } else if mismatches.len() < 12 {
            mismatches.push(format!("B(tree {:?}) = {v}, expected {leaves} leaves", t.edges()));
        }
    }

    let p3 = GraphFamily::Path(3).generate().expect("valid");
    let king_value = b(&product(&p3, &p3, ProductKind::Strong), options, cfg)?;
    if king_value != KING_EXPECTED {
        mismatches.push(format!("B(P3xP3) = {king_value}, expected {KING_EXPECTED}"));
    }
    Ok(CalibrationRow {
        options,
        cycle_values,
        cycles_ok,
        trees_matching,
        trees_total: trees.len(),
        trees_ok: trees_matching == trees.len(),
        king_value,
        king_ok: king_value == KING_EXPECTED,
        mismatches,
    })
}

/// All four rule option combinations against the three bodyguard checks.
pub fn calibrate_bodyguard(cfg: &SuiteConfig) -> SuiteResult {
    let results = BodyguardOptions::all()
        .iter()
        .enumerate()
        .map(|(i, &options)| {
            let name = format!(
                "co_location={} guards_first={}",
                options.co_location, options.guards_first
            );
            run(i as u32 + 1, &name, |r| {
                let row = calibration_checks(options, cfg)?;
                r.note(format!(
                    "cycles {:?}, trees {}/{}, P3xP3 {}",
                    row.cycle_values.iter().map(|c| c.1).collect::<Vec<_>>(),
                    row.trees_matching,
                    row.trees_total,
                    row.king_value
                ));
                for m in &row.mismatches {
                    r.note(m.clone());
                }
                let ok = row.cycles_ok && row.trees_ok && row.king_ok;
                r.value("row", row);
                Ok(ok)
            })
        })
        .collect();
    SuiteResult::new("calibrate-bodyguard", results)
}
