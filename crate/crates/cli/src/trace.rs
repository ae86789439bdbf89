//! `trace`: a best-play game record as JSON, optionally as DOT frames.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use cheatbot_core::graph::{to_dot, DotAnnotations, Graph};
use cheatbot_core::solver::{best_play_trace, solve_pursuit, SolveError, SolveOptions, Start, Trace, Variant};
use cheatbot_core::suite::SCHEMA_VERSION;
use serde::{Deserialize, Serialize};

use crate::input::GraphDescriptor;

/// `cheating`, `surround` or `push:B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GameArg(pub Variant);

impl FromStr for GameArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(GameArg(match s {
            "cheating" | "cheating-robot" => Variant::Cheating,
            "surround" | "surrounding" => Variant::Surround,
            _ => match s.strip_prefix("push:").map(str::parse) {
                Some(Ok(budget)) => Variant::Push { budget },
                _ => return Err(format!("unknown game {s:?} (cheating, surround, push:B)")),
            },
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub schema: u32,
    pub graph: GraphDescriptor,
    pub game: String,
    pub k: usize,
    pub cop_win: bool,
    pub trace: Trace,
}

fn game_name(v: Variant) -> String {
    match v {
        Variant::Cheating => "cheating".to_string(),
        Variant::Surround => "surround".to_string(),
        Variant::Push { budget } => format!("push:{budget}"),
    }
}

pub fn run(
    g: &Graph,
    descriptor: GraphDescriptor,
    game: Variant,
    k: usize,
    cops: Option<Vec<usize>>,
    robber: Option<usize>,
    opts: &SolveOptions,
) -> Result<TraceReport> {
    let result = solve_pursuit(g, k, game, opts)?;
    let table = result.pursuit().expect("pursuit solve");
    let cops = match cops {
        Some(c) => c,
        None => match &result.placement {
            Some(p) => p.clone(),
            None => (0..k).map(|i| i % g.n()).collect(),
        },
    };
    if cops.len() != k {
        bail!(SolveError::IllegalStart(format!(
            "{} cop start vertices given for k = {k}",
            cops.len()
        )));
    }
    if let Some(&c) = cops.iter().find(|&&c| c >= g.n()) {
        bail!(SolveError::IllegalStart(format!("cop vertex {c} out of range")));
    }
    let robber = match robber {
        Some(r) => r,
        None => {
            // the start that survives longest; escapes count as longest
            let mut tokens: Vec<_> = cops.iter().map(|&c| table.token(c, false)).collect();
            tokens.sort_unstable();
            (0..g.n())
                .filter(|r| !cops.contains(r))
                .max_by_key(|&r| (table.head_rank(&tokens, r).map_or(u32::MAX, u32::from), std::cmp::Reverse(r)))
                .ok_or_else(|| anyhow!("no free vertex for the robber"))?
        }
    };
    let trace = best_play_trace(&result, &Start { cops, robber })?;
    Ok(TraceReport {
        schema: SCHEMA_VERSION,
        graph: descriptor,
        game: game_name(game),
        k,
        cop_win: result.cop_win,
        trace,
    })
}

fn frame(g: &Graph, cops: &[usize], robber: Option<usize>, highlight: Vec<usize>, title: String) -> String {
    let mut count = BTreeMap::new();
    for &c in cops {
        *count.entry(c).or_insert(0) += 1;
    }
    to_dot(
        g,
        &DotAnnotations {
            cops: count,
            robber,
            highlight,
            title: Some(title),
        },
    )
}

/// One DOT graph for the start and one per round; pushers' targets are
/// drawn bold.
pub fn dot_frames(g: &Graph, report: &TraceReport) -> String {
    let t = &report.trace;
    let mut out = frame(g, &t.start_cops, Some(t.start_robber), Vec::new(), "start".to_string());
    for (i, r) in t.rounds.iter().enumerate() {
        let pushed: Vec<usize> = r.pushers.iter().map(|&c| r.cops_after[c]).collect();
        let title = format!("round {}: {} pusher(s)", i + 1, r.pushers.len());
        out.push_str(&frame(g, &r.cops_after, r.robber_after, pushed, title));
    }
    out
}
