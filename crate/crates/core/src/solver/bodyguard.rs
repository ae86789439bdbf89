//! Bodyguards and Presidents on an explicit arena.
//!
//! President-turn positions `(G, p)` follow a guard move, guard-turn
//! positions `(G, p)` follow a president move. The guards win if from some
//! point on every president-turn position has `N(p)` covered by guards, a
//! co-Büchi objective. The president's complementary Büchi objective is
//! solved with the classical attractor iteration.

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use super::{SolveError, SolveStats};
use crate::engine::BodyguardOptions;
use crate::graph::{Graph, Vertex};
use crate::multiset::{Binomials, Multisets, Token};

const MAX_VERTICES: usize = 128;

#[derive(Clone, Debug)]
pub struct BodyguardTable {
    n: usize,
    k: usize,
    options: BodyguardOptions,
    sets: Vec<Vec<Token>>,
    occ: Vec<u128>,
    /// Guard winning region: president-turn nodes `g * n + p`, then
    /// guard-turn nodes offset by `sets.len() * n`.
    guards_win: Vec<bool>,
    stats: SolveStats,
}

struct Arena<'a> {
    n: usize,
    half: usize,
    closed: Vec<Vec<Vertex>>,
    occ: &'a [u128],
    reach: &'a [Vec<u32>],
    co_location: bool,
}

impl Arena<'_> {
    fn valid(&self, node: usize) -> bool {
        let (g, p) = self.split(node);
        self.co_location || self.occ[g] >> p & 1 == 0
    }

    fn split(&self, node: usize) -> (usize, Vertex) {
        let x = node % self.half;
        (x / self.n, x % self.n)
    }

    fn president_turn(&self, node: usize) -> bool {
        node < self.half
    }

    fn succ(&self, node: usize, out: &mut Vec<usize>) {
        out.clear();
        let (g, p) = self.split(node);
        if self.president_turn(node) {
            for &q in &self.closed[p] {
                out.push(self.half + g * self.n + q);
            }
        } else {
            for &h in &self.reach[g] {
                out.push(h as usize * self.n + p);
            }
        }
        out.retain(|&x| self.valid(x));
    }

    fn pred(&self, node: usize, out: &mut Vec<usize>) {
        out.clear();
        let (g, p) = self.split(node);
        if self.president_turn(node) {
            // Guard moves are symmetric: h reaches g iff g reaches h.
            for &h in &self.reach[g] {
                out.push(self.half + h as usize * self.n + p);
            }
        } else {
            for &q in &self.closed[p] {
                out.push(g * self.n + q);
            }
        }
        out.retain(|&x| self.valid(x));
    }

    /// Attractor of `target` inside `zone` for the president (`true`) or
    /// the guards (`false`).
    fn attractor(&self, president: bool, target: &[bool], zone: &[bool]) -> Vec<bool> {
        let total = 2 * self.half;
        let mut attr = vec![false; total];
        let mut count = vec![0u32; total];
        let mut buf = Vec::new();
        let mut queue = VecDeque::new();
        for x in 0..total {
            if !zone[x] {
                continue;
            }
            if target[x] {
                attr[x] = true;
                queue.push_back(x);
            } else {
                self.succ(x, &mut buf);
                count[x] = buf.iter().filter(|&&y| zone[y]).count() as u32;
            }
        }
        let mut preds = Vec::new();
        while let Some(y) = queue.pop_front() {
            self.pred(y, &mut preds);
            for &x in &preds {
                if !zone[x] || attr[x] {
                    continue;
                }
                let own = self.president_turn(x) == president;
                if !own {
                    count[x] -= 1;
                }
                if own || count[x] == 0 {
                    attr[x] = true;
                    queue.push_back(x);
                }
            }
        }
        attr
    }
}

impl BodyguardTable {
    pub fn solve(g: &Graph, k: usize, options: BodyguardOptions, budget: u64) -> Result<Self, SolveError> {
        let start = Instant::now();
        let n = g.n();
        if n > MAX_VERTICES {
            return Err(SolveError::Unsupported(format!("bodyguard solver supports at most {MAX_VERTICES} vertices")));
        }
        let binom = Binomials::for_multisets(n, k);
        let m = binom.multisets(n, k);
        if m.saturating_mul(n as u64) > budget || m > u32::MAX as u64 {
            return Err(SolveError::Budget {
                estimated: m.saturating_mul(n as u64),
                budget,
            });
        }
        let sets: Vec<Vec<Token>> = (0..m)
            .map(|r| {
                let mut s = vec![0; k];
                binom.unrank(r, &mut s);
                s
            })
            .collect();
        let closed: Vec<Vec<Vertex>> = (0..n).map(|v| g.closed_neighbors(v)).collect();
        // Guard moves per multiset are at most the product of group options.
        let estimated = sets
            .iter()
            .map(|s| group_bound(s, &closed).min(m))
            .fold(0u64, |a, b| a.saturating_add(b.saturating_mul(2 * n as u64)));
        if estimated > budget {
            return Err(SolveError::Budget { estimated, budget });
        }
        let occ: Vec<u128> = sets
            .iter()
            .map(|s| s.iter().fold(0u128, |acc, &v| acc | 1 << v))
            .collect();
        let reach: Vec<Vec<u32>> = sets.iter().map(|s| guard_moves(s, &closed, &binom)).collect();

        let half = sets.len() * n;
        let arena = Arena {
            n,
            half,
            closed,
            occ: &occ,
            reach: &reach,
            co_location: options.co_location,
        };
        let valid: Vec<bool> = (0..2 * half).map(|x| arena.valid(x)).collect();
        // President targets: president-turn positions without a surround.
        let open_nbrs: Vec<u128> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u128, |acc, &w| acc | 1 << w))
            .collect();
        let escape: Vec<bool> = (0..2 * half)
            .map(|x| {
                let (gi, p) = arena.split(x);
                valid[x] && arena.president_turn(x) && open_nbrs[p] & !occ[gi] != 0
            })
            .collect();

        let mut zone = valid.clone();
        let mut rounds = 0;
        loop {
            rounds += 1;
            let target: Vec<bool> = (0..2 * half).map(|x| zone[x] && escape[x]).collect();
            let recur = arena.attractor(true, &target, &zone);
            let trapped: Vec<bool> = (0..2 * half).map(|x| zone[x] && !recur[x]).collect();
            if !trapped.iter().any(|&b| b) {
                break;
            }
            let lost = arena.attractor(false, &trapped, &zone);
            for x in 0..2 * half {
                if lost[x] {
                    zone[x] = false;
                }
            }
        }
        let guards_win: Vec<bool> = (0..2 * half).map(|x| valid[x] && !zone[x]).collect();
        let won = guards_win.iter().filter(|&&b| b).count() as u64;
        let transitions: u64 = reach.iter().map(|r| r.len() as u64).sum::<u64>() * n as u64;
        Ok(BodyguardTable {
            n,
            k,
            options,
            sets,
            occ,
            guards_win,
            stats: SolveStats {
                states: 2 * half as u64,
                transitions,
                won,
                iterations: rounds,
                wall_ms: start.elapsed().as_millis() as u64,
            },
        })
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn president_ok(&self, g: usize, p: Vertex) -> bool {
        self.options.co_location || self.occ[g] >> p & 1 == 0
    }

    /// Guards win from the guard-turn position `(guards, president)`.
    pub fn guard_turn_win(&self, g: usize, p: Vertex) -> bool {
        self.guards_win[self.sets.len() * self.n + g * self.n + p]
    }

    /// Guards win from the president-turn position `(guards, president)`.
    pub fn president_turn_win(&self, g: usize, p: Vertex) -> bool {
        self.guards_win[g * self.n + p]
    }

    /// With guards placed first: a placement that wins against every
    /// president start. Otherwise: the guards' winning reply to a
    /// president starting on vertex 0, provided every start can be answered.
    pub fn winning_placement(&self) -> Option<Vec<Vertex>> {
        let as_vertices = |g: usize| self.sets[g].iter().map(|&t| t as Vertex).collect();
        if self.options.guards_first {
            (0..self.sets.len())
                .find(|&g| (0..self.n).filter(|&p| self.president_ok(g, p)).all(|p| self.guard_turn_win(g, p)))
                .map(as_vertices)
        } else {
            let replies: Option<Vec<usize>> = (0..self.n)
                .map(|p| (0..self.sets.len()).find(|&g| self.president_ok(g, p) && self.president_turn_win(g, p)))
                .collect();
            replies.map(|r| as_vertices(r[0]))
        }
    }
}

fn group_bound(set: &[Token], closed: &[Vec<Vertex>]) -> u64 {
    let mut total = 1u64;
    let mut i = 0;
    while i < set.len() {
        let c = set[i..].iter().take_while(|&&t| t == set[i]).count();
        let d = closed[set[i] as usize].len();
        total = total.saturating_mul(Binomials::for_multisets(d, c).multisets(d, c));
        i += c;
    }
    total
}

/// Every multiset reachable by moving each guard of `set` within its
/// closed neighbourhood, as ranks.
fn guard_moves(set: &[Token], closed: &[Vec<Vertex>], binom: &Binomials) -> Vec<u32> {
    // Guards sharing a vertex move as a group: a multiset over N[v].
    let mut groups: Vec<Vec<Vec<Token>>> = Vec::new();
    let mut i = 0;
    while i < set.len() {
        let v = set[i];
        let c = set[i..].iter().take_while(|&&t| t == v).count();
        let nb = &closed[v as usize];
        let options = Multisets::new(nb.len(), c)
            .map(|m| m.iter().map(|&j| nb[j as usize] as Token).collect())
            .collect();
        groups.push(options);
        i += c;
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(set.len());
    fn rec(
        groups: &[Vec<Vec<Token>>],
        cur: &mut Vec<Token>,
        binom: &Binomials,
        seen: &mut HashSet<u64>,
        out: &mut Vec<u32>,
    ) {
        let Some((first, rest)) = groups.split_first() else {
            let mut s = cur.clone();
            s.sort_unstable();
            let r = binom.rank(&s);
            if seen.insert(r) {
                out.push(r as u32);
            }
            return;
        };
        for option in first {
            let len = cur.len();
            cur.extend_from_slice(option);
            rec(rest, cur, binom, seen, out);
            cur.truncate(len);
        }
    }
    rec(&groups, &mut cur, binom, &mut seen, &mut out);
    out.sort_unstable();
    out
}
