//! Move semantics for the three games.
//!
//! These functions work on explicit, small states and are the reference
//! for what the solvers encode more compactly. Every cop move sends each
//! cop to its closed neighbourhood, so passing is always legal.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Game {
    CheatingRobot,
    Surrounding,
    Bodyguard,
}

impl Game {
    pub fn as_str(self) -> &'static str {
        match self {
            Game::CheatingRobot => "cheating_robot",
            Game::Surrounding => "surrounding",
            Game::Bodyguard => "bodyguard",
        }
    }
}

/// Rule options for Bodyguards and Presidents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BodyguardOptions {
    /// The president may share a vertex with a guard. When off, neither
    /// side may step onto a vertex held by the other.
    pub co_location: bool,
    /// Guards are placed first and the president is placed last; guards
    /// then make the first move. When off the president is placed first and
    /// the guards' placement counts as their first turn.
    pub guards_first: bool,
}

impl Default for BodyguardOptions {
    fn default() -> Self {
        BodyguardOptions {
            co_location: true,
            guards_first: true,
        }
    }
}

impl BodyguardOptions {
    pub fn all() -> [BodyguardOptions; 4] {
        [(true, true), (true, false), (false, true), (false, false)].map(|(c, f)| BodyguardOptions {
            co_location: c,
            guards_first: f,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ruleset {
    pub game: Game,
    /// Only consulted when `game` is [`Game::Bodyguard`].
    pub bodyguard: BodyguardOptions,
}

impl Ruleset {
    pub fn cheating_robot() -> Self {
        Ruleset {
            game: Game::CheatingRobot,
            bodyguard: BodyguardOptions::default(),
        }
    }

    pub fn surrounding() -> Self {
        Ruleset {
            game: Game::Surrounding,
            bodyguard: BodyguardOptions::default(),
        }
    }

    pub fn bodyguard(options: BodyguardOptions) -> Self {
        Ruleset {
            game: Game::Bodyguard,
            bodyguard: options,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CopTurnState {
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RobberTurnState {
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
    /// Vertices `v` such that a cop moved `v -> robber` this turn.
    pub forbidden: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PushState {
    /// `(vertex, has_pushed)` per cop.
    pub cops: Vec<(Vertex, bool)>,
    pub robber: Vertex,
}

/// One collective cop move. Slot `i` refers to the `i`-th cop of the
/// state the move was generated from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveEvent {
    /// New positions, slot order.
    pub cops: Vec<Vertex>,
    /// Slots that end on the robber's vertex.
    pub pushers: Vec<usize>,
    /// `(from, to)` per slot.
    pub traversed: Vec<(Vertex, Vertex)>,
}

impl MoveEvent {
    /// The robber-turn position this move produces.
    pub fn robber_state(&self, robber: Vertex) -> RobberTurnState {
        let mut forbidden: Vec<Vertex> = self
            .traversed
            .iter()
            .filter(|&&(from, to)| to == robber && from != robber)
            .map(|&(from, _)| from)
            .collect();
        forbidden.sort_unstable();
        forbidden.dedup();
        RobberTurnState {
            cops: sorted(&self.cops),
            robber,
            forbidden,
        }
    }
}

fn sorted(v: &[Vertex]) -> Vec<Vertex> {
    let mut out = v.to_vec();
    out.sort_unstable();
    out
}

/// Every collective cop move from `s`, deduplicated on (canonical cop
/// multiset, forbidden set, pusher count). Enumeration is exponential in
/// the number of cops; the solvers use their own compact encoding.
pub fn cop_moves(s: &CopTurnState, g: &Graph) -> Vec<MoveEvent> {
    let options: Vec<Vec<Vertex>> = s.cops.iter().map(|&c| g.closed_neighbors(c)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut choice = vec![0usize; options.len()];
    loop {
        let cops: Vec<Vertex> = choice.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        let event = MoveEvent {
            pushers: (0..cops.len()).filter(|&i| cops[i] == s.robber).collect(),
            traversed: s.cops.iter().copied().zip(cops.iter().copied()).collect(),
            cops,
        };
        let rs = event.robber_state(s.robber);
        if seen.insert((rs.cops, rs.forbidden, event.pushers.len())) {
            out.push(event);
        }
        // Odometer over the per-cop choices.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Legal evader moves from a robber-turn position, ascending.
///
/// For the bodyguard game `cops` holds the guards and `forbidden` is
/// ignored.
pub fn robber_responses(s: &RobberTurnState, g: &Graph, rules: &Ruleset) -> Vec<Vertex> {
    let occupied = |v: Vertex| s.cops.contains(&v);
    g.closed_neighbors(s.robber)
        .into_iter()
        .filter(|&v| match rules.game {
            Game::CheatingRobot => !occupied(v) && (v == s.robber || !s.forbidden.contains(&v)),
            Game::Surrounding => !occupied(v),
            Game::Bodyguard => rules.bodyguard.co_location || !occupied(v),
        })
        .collect()
}

/// Every neighbour of `v` holds at least one cop.
pub fn surround_holds(cops: &[Vertex], v: Vertex, g: &Graph) -> bool {
    g.neighbors(v).iter().all(|w| cops.contains(w))
}

pub trait Canonical {
    fn canonicalize(&self) -> Self;
}

impl Canonical for CopTurnState {
    fn canonicalize(&self) -> Self {
        CopTurnState {
            cops: sorted(&self.cops),
            robber: self.robber,
        }
    }
}

impl Canonical for RobberTurnState {
    fn canonicalize(&self) -> Self {
        let mut forbidden = sorted(&self.forbidden);
        forbidden.dedup();
        RobberTurnState {
            cops: sorted(&self.cops),
            robber: self.robber,
            forbidden,
        }
    }
}

impl Canonical for PushState {
    fn canonicalize(&self) -> Self {
        let mut cops = self.cops.clone();
        cops.sort_unstable();
        PushState {
            cops,
            robber: self.robber,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub cops: Vec<Vertex>,
    /// Legal evader start vertices; empty means the cops win outright.
    pub robber_options: Vec<Vertex>,
}

/// All canonical placements of `k` cops, each with its legal evader
/// starts.
pub fn initial_states(g: &Graph, k: usize, rules: &Ruleset) -> Vec<Placement> {
    let n = g.n();
    crate::multiset::Multisets::new(n, k)
        .map(|m| {
            let cops: Vec<Vertex> = m.into_iter().map(Vertex::from).collect();
            let any = rules.game == Game::Bodyguard && rules.bodyguard.co_location;
            let robber_options = (0..n).filter(|v| any || !cops.contains(v)).collect();
            Placement { cops, robber_options }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;
    use proptest::prelude::*;

    fn gen(f: GraphFamily) -> Graph {
        f.generate().unwrap()
    }

    #[test]
    fn cop_moves_on_p3() {
        let g = gen(GraphFamily::Path(3));
        let moves = cop_moves(&CopTurnState { cops: vec![1], robber: 0 }, &g);
        assert_eq!(moves.len(), 3);
        let onto = moves.iter().find(|m| m.cops == vec![0]).unwrap();
        assert_eq!(onto.pushers, vec![0]);
        assert!(moves.iter().filter(|m| m.cops != vec![0]).all(|m| m.pushers.is_empty()));
    }

    #[test]
    fn doubled_cops_on_c4_dedupe_to_multisets() {
        let g = gen(GraphFamily::Cycle(4));
        let moves = cop_moves(&CopTurnState { cops: vec![0, 0], robber: 2 }, &g);
        assert_eq!(moves.len(), 6);
    }

    #[test]
    fn all_pass_is_included() {
        let g = gen(GraphFamily::Cycle(5));
        let s = CopTurnState { cops: vec![0, 2], robber: 4 };
        assert!(cop_moves(&s, &g).iter().any(|m| m.cops == s.cops));
    }

    #[test]
    fn cheating_response_excludes_traversed_edge() {
        // Cop moves 1 -> 2 onto the robber on C_5.
        let g = gen(GraphFamily::Cycle(5));
        let s = RobberTurnState { cops: vec![2], robber: 2, forbidden: vec![1] };
        assert_eq!(robber_responses(&s, &g, &Ruleset::cheating_robot()), vec![3]);
        assert_eq!(robber_responses(&s, &g, &Ruleset::surrounding()), vec![1, 3]);
    }

    #[test]
    fn leaf_capture_on_p5() {
        let g = gen(GraphFamily::Path(5));
        let s = RobberTurnState { cops: vec![0], robber: 0, forbidden: vec![1] };
        assert!(robber_responses(&s, &g, &Ruleset::cheating_robot()).is_empty());
    }

    #[test]
    fn surrounding_pass_allowed() {
        let g = gen(GraphFamily::Cycle(6));
        let s = RobberTurnState { cops: vec![3], robber: 0, forbidden: vec![] };
        assert_eq!(robber_responses(&s, &g, &Ruleset::surrounding()), vec![0, 1, 5]);
    }

    #[test]
    fn president_responses() {
        let g = gen(GraphFamily::Path(3));
        let s = RobberTurnState { cops: vec![0], robber: 1, forbidden: vec![] };
        let on = Ruleset::bodyguard(BodyguardOptions::default());
        let off = Ruleset::bodyguard(BodyguardOptions { co_location: false, guards_first: true });
        assert_eq!(robber_responses(&s, &g, &on), vec![0, 1, 2]);
        assert_eq!(robber_responses(&s, &g, &off), vec![1, 2]);
    }

    #[test]
    fn surround_examples() {
        assert!(surround_holds(&[1, 4], 0, &gen(GraphFamily::Cycle(5))));
        assert!(!surround_holds(&[1, 2], 0, &gen(GraphFamily::Star(3))));
        assert!(surround_holds(&[1, 2, 3], 0, &gen(GraphFamily::Complete(4))));
        // Occupancy, not multiplicity.
        assert!(!surround_holds(&[1, 1], 0, &gen(GraphFamily::Cycle(5))));
    }

    #[test]
    fn canonical_examples() {
        let s = CopTurnState { cops: vec![3, 1, 2], robber: 0 }.canonicalize();
        assert_eq!(s.cops, vec![1, 2, 3]);
        let p = PushState { cops: vec![(3, true), (1, false)], robber: 0 }.canonicalize();
        assert_eq!(p.cops, vec![(1, false), (3, true)]);
    }

    #[test]
    fn initial_placements() {
        let p2 = initial_states(&gen(GraphFamily::Path(2)), 1, &Ruleset::cheating_robot());
        assert_eq!(p2.len(), 2);
        assert!(p2.iter().all(|p| p.robber_options.len() == 1));
        let c3 = initial_states(&gen(GraphFamily::Cycle(3)), 2, &Ruleset::cheating_robot());
        assert_eq!(c3.len(), 6);
        let k3 = initial_states(&gen(GraphFamily::Complete(3)), 3, &Ruleset::cheating_robot());
        assert!(k3.iter().any(|p| p.cops == vec![0, 1, 2] && p.robber_options.is_empty()));
        let guards = initial_states(&gen(GraphFamily::Path(2)), 1, &Ruleset::bodyguard(Default::default()));
        assert!(guards.iter().all(|p| p.robber_options.len() == 2));
    }

    fn small_connected() -> impl Strategy<Value = Graph> {
        (2usize..7, proptest::collection::vec(any::<bool>(), 21)).prop_map(|(n, bits)| {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            let mut i = 0;
            for u in 0..n {
                for v in (u + 2)..n {
                    if bits[i % bits.len()] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(cops in proptest::collection::vec((0usize..9, any::<bool>()), 1..6), r in 0usize..9) {
            let p = PushState { cops: cops.clone(), robber: r };
            prop_assert_eq!(p.canonicalize().canonicalize(), p.canonicalize());
            let c = CopTurnState { cops: cops.iter().map(|x| x.0).collect(), robber: r };
            prop_assert_eq!(c.canonicalize().canonicalize(), c.canonicalize());
        }

        #[test]
        fn pushers_iff_robber_covered(g in small_connected(), seed in any::<u64>()) {
            let n = g.n();
            let cops = vec![(seed % n as u64) as usize, ((seed / 7) % n as u64) as usize];
            let robber = (0..n).find(|v| !cops.contains(v));
            prop_assume!(robber.is_some());
            let robber = robber.unwrap();
            for m in cop_moves(&CopTurnState { cops, robber }, &g) {
                prop_assert_eq!(!m.pushers.is_empty(), m.cops.contains(&robber));
                let rs = m.robber_state(robber);
                prop_assert!(rs.forbidden.iter().all(|&v| g.has_edge(v, robber)));
                let cheat = robber_responses(&rs, &g, &Ruleset::cheating_robot());
                let surround = robber_responses(&rs, &g, &Ruleset::surrounding());
                prop_assert!(cheat.iter().all(|v| surround.contains(v)));
            }
        }
    }
}
