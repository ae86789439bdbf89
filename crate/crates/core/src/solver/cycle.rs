//! The explicit two-cop pincer on `C_n`.
//!
//! Cop 0 starts on `v0` and walks backwards, cop 1 starts on `v1` and walks
//! forwards; each waits while the robber is next to it. Once the robber is
//! next to both, cop 0 steps onto it.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{Outcome, Round, Trace};
use crate::engine::{robber_responses, MoveEvent, Ruleset};
use crate::graph::{Graph, GraphFamily, Vertex};

#[derive(Clone, Debug)]
pub struct CycleStrategy {
    n: usize,
    g: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleVerification {
    pub n: usize,
    /// Every robber strategy from every start is captured.
    pub all_captured: bool,
    /// Longest game over all robber strategies and starts.
    pub max_rounds: usize,
    /// Reachable cop moves that push the robber.
    pub pushes: usize,
    pub states: usize,
}

/// Builds the pincer for `C_n`, `n >= 3`.
pub fn scripted_cycle_strategy(n: usize) -> CycleStrategy {
    assert!(n >= 3, "cycles need at least 3 vertices");
    CycleStrategy {
        n,
        g: GraphFamily::Cycle(n).generate().expect("n >= 3"),
    }
}

#[derive(Clone, Copy)]
enum Node {
    Open,
    Done(usize),
}

impl CycleStrategy {
    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn start(&self) -> [Vertex; 2] {
        [0, 1]
    }

    /// The cop reply to robber position `r`.
    pub fn cop_move(&self, cops: [Vertex; 2], r: Vertex) -> [Vertex; 2] {
        let n = self.n;
        let back = (cops[0] + n - 1) % n;
        let fwd = (cops[1] + 1) % n;
        if back == r && fwd == r {
            return [r, cops[1]];
        }
        [if back == r { cops[0] } else { back }, if fwd == r { cops[1] } else { fwd }]
    }

    fn step(&self, cops: [Vertex; 2], r: Vertex) -> ([Vertex; 2], Vec<Vertex>) {
        let next = self.cop_move(cops, r);
        let ev = MoveEvent {
            cops: next.to_vec(),
            pushers: (0..2).filter(|&i| next[i] == r).collect(),
            traversed: vec![(cops[0], next[0]), (cops[1], next[1])],
        };
        let responses = robber_responses(&ev.robber_state(r), &self.g, &Ruleset::cheating_robot());
        (next, responses)
    }

    /// Exhaustive check against every robber strategy from every start.
    pub fn verify(&self) -> CycleVerification {
        let mut memo = HashMap::new();
        let mut pushes = 0;
        let mut ok = true;
        let mut worst = 0;
        for r in (0..self.n).filter(|r| !self.start().contains(r)) {
            match self.longest(self.start(), r, &mut memo, &mut pushes) {
                Some(d) => worst = worst.max(d),
                None => ok = false,
            }
        }
        CycleVerification {
            n: self.n,
            all_captured: ok,
            max_rounds: worst,
            pushes,
            states: memo.len(),
        }
    }

    /// Longest game from a cop-turn position; `None` if the robber can
    /// force a repetition.
    fn longest(
        &self,
        cops: [Vertex; 2],
        r: Vertex,
        memo: &mut HashMap<([Vertex; 2], Vertex), Node>,
        pushes: &mut usize,
    ) -> Option<usize> {
        match memo.get(&(cops, r)) {
            Some(Node::Done(d)) => return Some(*d),
            Some(Node::Open) => return None,
            None => {}
        }
        memo.insert((cops, r), Node::Open);
        let (next, responses) = self.step(cops, r);
        if !responses.is_empty() && next.contains(&r) {
            *pushes += 1;
        }
        let mut worst = 0;
        for x in responses {
            worst = worst.max(self.longest(next, x, memo, pushes)?);
        }
        memo.insert((cops, r), Node::Done(worst + 1));
        Some(worst + 1)
    }

    /// The game against a robber that always picks a longest continuation.
    pub fn worst_trace(&self, robber: Vertex) -> Trace {
        let mut memo = HashMap::new();
        let mut pushes = 0;
        let mut cops = self.start();
        let mut r = robber;
        let mut rounds = Vec::new();
        let mut pushers = BTreeSet::<usize>::new();
        loop {
            let (next, responses) = self.step(cops, r);
            let choice = responses
                .iter()
                .copied()
                .max_by_key(|&x| (self.longest(next, x, &mut memo, &mut pushes), std::cmp::Reverse(x)));
            let movers: Vec<usize> = if choice.is_some() { (0..2).filter(|&i| next[i] == r).collect() } else { Vec::new() };
            pushers.extend(&movers);
            rounds.push(Round {
                cops_before: cops.to_vec(),
                cops_after: next.to_vec(),
                robber_before: r,
                pushers: movers,
                robber_after: choice,
            });
            match choice {
                Some(x) => {
                    cops = next;
                    r = x;
                }
                None => break,
            }
        }
        Trace {
            start_cops: self.start().to_vec(),
            start_robber: robber,
            outcome: Outcome::Captured { rounds: rounds.len() },
            rounds,
            distinct_pushers: pushers.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cycles() {
        for n in 3..=12 {
            let v = scripted_cycle_strategy(n).verify();
            assert!(v.all_captured, "n = {n}");
            assert_eq!(v.pushes, 0, "n = {n}");
            assert!(v.max_rounds <= 2 * n, "n = {n}: {}", v.max_rounds);
        }
        assert!(scripted_cycle_strategy(3).verify().max_rounds <= 2);
    }

    #[test]
    fn worst_trace_has_no_pushes() {
        let s = scripted_cycle_strategy(5);
        for r in 2..5 {
            let t = s.worst_trace(r);
            assert_eq!(t.distinct_pushers, 0);
            assert!(t.rounds.len() <= 10);
        }
    }
}
