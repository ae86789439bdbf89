//! Witness graphs and exhaustive corpora bundled with the crate.
//!
//! The figure graphs are hand transcriptions; each fixture file carries
//! notes on how drawing labels map to vertex indices.

use crate::graph::{parse_corpus_line, parse_edgelist, Graph};

const HEAWOOD: &str = include_str!("../fixtures/heawood.txt");
const PETERSEN: &str = include_str!("../fixtures/petersen.txt");
const K23: &str = include_str!("../fixtures/k23.txt");
const FIG1_H: &str = include_str!("../fixtures/fig1_h.txt");
const FIG1_G: &str = include_str!("../fixtures/fig1_g.txt");
const FIG2: &str = include_str!("../fixtures/fig2.txt");
const FIG3: &str = include_str!("../fixtures/fig3.txt");
const CONNECTED: &str = include_str!("../fixtures/connected_upto7.txt");
const TREES: &str = include_str!("../fixtures/trees_upto8.txt");

fn load(text: &str) -> Graph {
    parse_edgelist(text).expect("bundled fixture parses")
}

pub fn heawood() -> Graph {
    load(HEAWOOD)
}

pub fn petersen() -> Graph {
    load(PETERSEN)
}

pub fn k23() -> Graph {
    load(K23)
}

/// Four 4-cycles joined in a ring.
pub fn fig1_h() -> Graph {
    load(FIG1_H)
}

/// `fig1_h` plus the four chords between consecutive hubs.
pub fn fig1_g() -> Graph {
    load(FIG1_G)
}

pub fn fig2() -> Graph {
    load(FIG2)
}

pub fn fig3() -> Graph {
    load(FIG3)
}

/// Named fixtures, for lookup by the command-line front end.
pub fn by_name(name: &str) -> Option<Graph> {
    Some(match name {
        "heawood" => heawood(),
        "petersen" => petersen(),
        "k23" => k23(),
        "fig1-h" => fig1_h(),
        "fig1-g" => fig1_g(),
        "fig2" => fig2(),
        "fig3" => fig3(),
        _ => return None,
    })
}

pub const FIXTURE_NAMES: [&str; 7] = ["heawood", "petersen", "k23", "fig1-h", "fig1-g", "fig2", "fig3"];

fn corpus(text: &str, max_n: usize) -> Vec<Graph> {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .map(|l| parse_corpus_line(l).expect("bundled corpus line parses"))
        .filter(|g| g.n() <= max_n)
        .collect()
}

/// Every connected graph on `1..=max_n` vertices up to isomorphism
/// (`max_n <= 7`).
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 7, "the bundled corpus stops at 7 vertices");
    corpus(CONNECTED, max_n)
}

/// Every tree on `1..=max_n` vertices up to isomorphism (`max_n <= 8`).
pub fn trees(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 8, "the bundled corpus stops at 8 vertices");
    corpus(TREES, max_n)
}
