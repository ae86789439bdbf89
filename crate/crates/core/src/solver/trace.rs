//! Optimal-play traces read off a solved pursuit table.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{PursuitTable, SolveError, SolveResult};
use crate::graph::Vertex;
use crate::multiset::Token;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    /// Labelled cop positions before and after the cop move.
    pub cops_before: Vec<Vertex>,
    pub cops_after: Vec<Vertex>,
    pub robber_before: Vertex,
    /// Cops that moved onto the robber's vertex and did not capture.
    pub pushers: Vec<usize>,
    /// `None` once the robber is captured or surrounded.
    pub robber_after: Option<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Captured { rounds: usize },
    Surrounded { rounds: usize },
    /// The position before round `from` recurs; play continues forever.
    Escaped { from: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub start_cops: Vec<Vertex>,
    pub start_robber: Vertex,
    pub rounds: Vec<Round>,
    pub outcome: Outcome,
    pub distinct_pushers: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Start {
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
}

/// Plays the table's cop policy against a best-responding robber: longest
/// survival first, then the most distinct pushers over greedy
/// continuations, then the lowest vertex.
pub fn best_play_trace(result: &SolveResult, start: &Start) -> Result<Trace, SolveError> {
    let table = result
        .pursuit()
        .ok_or_else(|| SolveError::Unsupported("traces are only produced for pursuit games".into()))?;
    let n = table.n();
    if start.cops.len() != table.k() {
        return Err(SolveError::IllegalStart(format!("expected {} cops, got {}", table.k(), start.cops.len())));
    }
    if start.robber >= n || start.cops.iter().any(|&c| c >= n) {
        return Err(SolveError::IllegalStart("vertex out of range".into()));
    }
    if start.cops.contains(&start.robber) {
        return Err(SolveError::IllegalStart("robber starts on a cop".into()));
    }
    let player = Player { table };
    let state = State {
        pos: start.cops.clone(),
        flag: vec![false; start.cops.len()],
        robber: start.robber,
    };
    Ok(player.play(state, true))
}

#[derive(Clone)]
struct State {
    pos: Vec<Vertex>,
    flag: Vec<bool>,
    robber: Vertex,
}

struct Player<'a> {
    table: &'a PursuitTable,
}

impl Player<'_> {
    fn tokens(&self, pos: &[Vertex], flag: &[bool]) -> Vec<Token> {
        let mut t: Vec<Token> = pos.iter().zip(flag).map(|(&v, &f)| self.table.token(v, f)).collect();
        t.sort_unstable();
        t
    }

    fn play(&self, mut s: State, lookahead: bool) -> Trace {
        let t = self.table;
        let start_cops = s.pos.clone();
        let start_robber = s.robber;
        let mut rounds = Vec::new();
        let mut pushed: BTreeSet<usize> = BTreeSet::new();
        let mut seen = HashMap::new();
        let outcome = loop {
            let tokens = self.tokens(&s.pos, &s.flag);
            let winning = t.head_rank(&tokens, s.robber).is_some();
            if !winning {
                if let Some(&from) = seen.get(&(tokens.clone(), s.robber)) {
                    break Outcome::Escaped { from };
                }
                seen.insert((tokens.clone(), s.robber), rounds.len());
            }
            let mut after = s.pos.clone();
            let mut flag = s.flag.clone();
            if winning {
                let mv = t.cop_move(&tokens, s.robber).expect("winning position has a move");
                let mut used = vec![false; after.len()];
                for &(from, to) in &mv.steps {
                    let i = (0..after.len())
                        .find(|&i| !used[i] && t.token(s.pos[i], s.flag[i]) == from)
                        .expect("step matches a cop");
                    used[i] = true;
                    after[i] = t.vertex(to);
                    flag[i] = s.flag[i] || after[i] == s.robber;
                }
            }
            let movers: Vec<usize> = (0..after.len()).filter(|&i| after[i] == s.robber).collect();
            let forbidden: Vec<Vertex> = {
                let mut f: Vec<Vertex> = movers.iter().map(|&i| s.pos[i]).collect();
                f.sort_unstable();
                f.dedup();
                f
            };
            let after_tokens = self.tokens(&after, &flag);
            if t.robber_turn_rank(&after_tokens, s.robber, &forbidden) == Some(0) {
                let surrounded = !t.allowed(&after_tokens, s.robber, &forbidden).is_empty();
                rounds.push(Round {
                    cops_before: s.pos.clone(),
                    cops_after: after,
                    robber_before: s.robber,
                    pushers: Vec::new(),
                    robber_after: None,
                });
                let n = rounds.len();
                break if surrounded { Outcome::Surrounded { rounds: n } } else { Outcome::Captured { rounds: n } };
            }
            let options = t.allowed(&after_tokens, s.robber, &forbidden);
            let value = |r: Vertex| t.head_rank(&after_tokens, r).map_or(u32::MAX, u32::from);
            let best = options.iter().map(|&r| value(r)).max().expect("robber survives");
            let ties: Vec<Vertex> = options.into_iter().filter(|&r| value(r) == best).collect();
            pushed.extend(&movers);
            let next_state = |r: Vertex| State {
                pos: after.clone(),
                flag: flag.clone(),
                robber: r,
            };
            let choice = if lookahead && winning && ties.len() > 1 {
                let mut best_r = ties[0];
                let mut best_p = 0;
                for &r in &ties {
                    let rest = self.play(next_state(r), false);
                    let mut all = pushed.clone();
                    all.extend(rest.rounds.iter().flat_map(|x| x.pushers.iter().copied()));
                    if all.len() > best_p {
                        best_p = all.len();
                        best_r = r;
                    }
                }
                best_r
            } else {
                ties[0]
            };
            rounds.push(Round {
                cops_before: s.pos.clone(),
                cops_after: after.clone(),
                robber_before: s.robber,
                pushers: movers,
                robber_after: Some(choice),
            });
            s = next_state(choice);
        };
        Trace {
            start_cops,
            start_robber,
            rounds,
            outcome,
            distinct_pushers: pushed.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{cop_moves, robber_responses, surround_holds, CopTurnState, Ruleset};
    use crate::graph::{Graph, GraphFamily};
    use crate::solver::{solve_pursuit, SolveOptions, Variant};

    fn result(g: &Graph, k: usize, v: Variant) -> SolveResult {
        solve_pursuit(g, k, v, &SolveOptions::default()).unwrap()
    }

    /// Every round is a legal engine transition.
    fn check_legal(g: &Graph, tr: &Trace, rules: &Ruleset) {
        for round in &tr.rounds {
            let s = CopTurnState {
                cops: round.cops_before.clone(),
                robber: round.robber_before,
            };
            let ev = cop_moves(&s, g)
                .into_iter()
                .find(|e| {
                    let mut a = e.cops.clone();
                    let mut b = round.cops_after.clone();
                    a.sort_unstable();
                    b.sort_unstable();
                    a == b
                })
                .expect("cop move is legal");
            for (i, (&a, &b)) in round.cops_before.iter().zip(&round.cops_after).enumerate() {
                assert!(a == b || g.has_edge(a, b), "cop {i} jumps");
            }
            let responses = robber_responses(&ev.robber_state(round.robber_before), g, rules);
            match round.robber_after {
                Some(r) => assert!(responses.contains(&r)),
                None => assert!(responses.is_empty() || surround_holds(&round.cops_after, round.robber_before, g)),
            }
        }
    }

    #[test]
    fn path_capture_within_two_rounds() {
        let g = GraphFamily::Path(3).generate().unwrap();
        let r = result(&g, 1, Variant::Cheating);
        let tr = best_play_trace(&r, &Start { cops: vec![1], robber: 0 }).unwrap();
        assert!(matches!(tr.outcome, Outcome::Captured { rounds } if rounds <= 2));
        check_legal(&g, &tr, &Ruleset::cheating_robot());
    }

    #[test]
    fn path_seven_records_one_pusher() {
        let g = GraphFamily::Path(7).generate().unwrap();
        let r = result(&g, 1, Variant::Push { budget: 1 });
        let (cops, _) = r.pursuit().unwrap().best_placement().unwrap();
        let worst = (0..7)
            .filter(|v| !cops.contains(v))
            .map(|robber| best_play_trace(&r, &Start { cops: cops.clone(), robber }).unwrap())
            .map(|t| t.distinct_pushers)
            .max();
        assert_eq!(worst, Some(1));
    }

    #[test]
    fn robber_win_detects_repetition() {
        let g = GraphFamily::Cycle(6).generate().unwrap();
        let r = result(&g, 1, Variant::Cheating);
        let tr = best_play_trace(&r, &Start { cops: vec![0], robber: 3 }).unwrap();
        assert!(matches!(tr.outcome, Outcome::Escaped { .. }));
        check_legal(&g, &tr, &Ruleset::cheating_robot());
    }

    #[test]
    fn cycle_traces_are_legal() {
        for n in 4..=8 {
            let g = GraphFamily::Cycle(n).generate().unwrap();
            let r = result(&g, 2, Variant::Cheating);
            let (cops, rounds) = r.pursuit().unwrap().best_placement().unwrap();
            for robber in (0..n).filter(|v| !cops.contains(v)) {
                let tr = best_play_trace(&r, &Start { cops: cops.clone(), robber }).unwrap();
                assert!(matches!(tr.outcome, Outcome::Captured { rounds: x } if x <= rounds as usize));
                check_legal(&g, &tr, &Ruleset::cheating_robot());
            }
        }
    }

    #[test]
    fn surround_trace_ends_surrounded() {
        let g = GraphFamily::Cycle(5).generate().unwrap();
        let r = result(&g, 2, Variant::Surround);
        let (cops, _) = r.pursuit().unwrap().best_placement().unwrap();
        let robber = (0..5).find(|v| !cops.contains(v)).unwrap();
        let tr = best_play_trace(&r, &Start { cops, robber }).unwrap();
        assert!(matches!(tr.outcome, Outcome::Surrounded { .. } | Outcome::Captured { .. }));
        check_legal(&g, &tr, &Ruleset::surrounding());
    }

    #[test]
    fn rejects_bad_start() {
        let g = GraphFamily::Path(3).generate().unwrap();
        let r = result(&g, 1, Variant::Cheating);
        assert!(best_play_trace(&r, &Start { cops: vec![1], robber: 1 }).is_err());
        assert!(best_play_trace(&r, &Start { cops: vec![1, 2], robber: 0 }).is_err());
    }
}
