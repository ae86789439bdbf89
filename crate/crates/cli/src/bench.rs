//! `bench`: solver and fixed-point timings over a family sweep, as CSV.

use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use cheatbot_core::graph::{Graph, GraphFamily};
use cheatbot_core::psi::{check_ccr_le_k, PsiError, PsiOptions};
use cheatbot_core::solver::{solve_pursuit, SolveError, SolveOptions, Variant};
use clap::ValueEnum;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::input;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Solver,
    Psi,
    Both,
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub graph: String,
    pub n: usize,
    pub k: usize,
    pub engine: &'static str,
    pub rep: usize,
    pub states: u64,
    pub transitions: u64,
    pub iterations: u64,
    pub wall_ms: f64,
    pub cop_win: Option<bool>,
    /// `ok`, `budget` or `error: ...`.
    pub status: String,
}

/// Random labelled tree from a Prüfer sequence.
fn random_tree(n: usize, rng: &mut StdRng) -> Graph {
    if n < 2 {
        return Graph::from_edges(1, &[]).expect("single vertex");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("tree edges are simple")
}

/// Expands a sweep: `family:LO..HI`, `random-tree:LO..HI`, or any single
/// graph argument.
pub fn sweep(words: &[String], seed: u64) -> Result<Vec<(String, Graph)>> {
    if let [one] = words {
        if let Some((name, range)) = one.split_once(':').filter(|(_, r)| r.contains("..")) {
            let (lo, hi) = range.split_once("..").expect("checked");
            let lo: usize = lo.parse().context("sweep lower bound")?;
            let hi: usize = hi.trim_start_matches('=').parse().context("sweep upper bound")?;
            if lo > hi {
                bail!("empty sweep {one}");
            }
            let mut rng = StdRng::seed_from_u64(seed);
            return (lo..=hi)
                .map(|n| {
                    let label = format!("{name}:{n}");
                    if name == "random-tree" {
                        return Ok((label, random_tree(n, &mut rng)));
                    }
                    Ok((label.clone(), label.parse::<GraphFamily>()?.generate()?))
                })
                .collect();
        }
    }
    let loaded = input::load(words)?;
    Ok(vec![(loaded.descriptor.spec, loaded.graph)])
}

fn solver_row(label: &str, g: &Graph, k: usize, rep: usize, opts: &SolveOptions) -> Row {
    let start = Instant::now();
    let res = solve_pursuit(g, k, Variant::Cheating, opts);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut row = Row {
        graph: label.to_string(),
        n: g.n(),
        k,
        engine: "solver",
        rep,
        states: 0,
        transitions: 0,
        iterations: 0,
        wall_ms,
        cop_win: None,
        status: "ok".to_string(),
    };
    match res {
        Ok(r) => {
            let s = r.stats();
            row.states = s.states;
            row.transitions = s.transitions;
            row.iterations = s.iterations;
            row.cop_win = Some(r.cop_win);
        }
        Err(SolveError::Budget { estimated, .. }) => {
            row.transitions = estimated;
            row.status = "budget".to_string();
        }
        Err(e) => row.status = format!("error: {e}"),
    }
    row
}

fn psi_row(label: &str, g: &Graph, k: usize, rep: usize, opts: &SolveOptions) -> Row {
    let start = Instant::now();
    let res = check_ccr_le_k(g, k, PsiOptions::default(), opts.budget);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut row = Row {
        graph: label.to_string(),
        n: g.n(),
        k,
        engine: "psi",
        rep,
        states: 0,
        transitions: 0,
        iterations: 0,
        wall_ms,
        cop_win: None,
        status: "ok".to_string(),
    };
    match res {
        Ok(v) => {
            row.states = v.stats.entries as u64;
            row.transitions = v.stats.pairs_initial;
            row.iterations = v.stats.iterations;
            row.cop_win = Some(v.cops_win);
        }
        Err(PsiError::Budget { estimated, .. }) => {
            row.transitions = estimated;
            row.status = "budget".to_string();
        }
        Err(e) => row.status = format!("error: {e}"),
    }
    row
}

pub fn run(
    graphs: &[(String, Graph)],
    k: usize,
    reps: usize,
    engine: Engine,
    opts: &SolveOptions,
    out: impl Write,
) -> Result<usize> {
    let mut w = csv::Writer::from_writer(out);
    let mut rows = 0;
    for (label, g) in graphs {
        for rep in 0..reps {
            if matches!(engine, Engine::Solver | Engine::Both) {
                w.serialize(solver_row(label, g, k, rep, opts))?;
                rows += 1;
            }
            if matches!(engine, Engine::Psi | Engine::Both) {
                w.serialize(psi_row(label, g, k, rep, opts))?;
                rows += 1;
            }
        }
    }
    w.flush()?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_trees_are_trees() {
        let mut rng = StdRng::seed_from_u64(3);
        for n in 2..20 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn sweep_forms() {
        let words = |s: &str| vec![s.to_string()];
        assert_eq!(sweep(&words("cycle:4..10"), 0).unwrap().len(), 7);
        assert_eq!(sweep(&words("random-tree:5..8"), 0).unwrap().len(), 4);
        assert_eq!(sweep(&words("icosahedron"), 0).unwrap().len(), 1);
    }
}
