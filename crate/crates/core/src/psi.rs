//! The ψ characterization of `c_cr(G) > k` and the fixed-point check
//! built on it, over labelled cop tuples.
//!
//! ψ maps each cop move `(T1, T2)` with `T2 ∈ N[T1]` to a set of robber
//! moves `(r1, r2)`. Refinement only removes pairs; the cops win iff some
//! entry empties.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PsiError {
    #[error("at least one cop is required")]
    NoCops,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("ψ tables support at most {MAX_VERTICES} vertices")]
    TooLarge,
    #[error("estimated {estimated} ψ words exceeds the budget of {budget}")]
    Budget { estimated: u64, budget: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiOptions {
    /// Robber steps range over `N[r1]` instead of edges only.
    pub closed_step: bool,
    /// Also prune `ψ(T2 T3)` to first entries in `ψ2(T1 T2)` for every `T1`.
    pub reverse_prune: bool,
}

impl Default for PsiOptions {
    fn default() -> Self {
        PsiOptions {
            closed_step: true,
            reverse_prune: true,
        }
    }
}

impl PsiOptions {
    /// The literal reading: edge steps only, both pruning rules.
    pub const LITERAL: PsiOptions = PsiOptions {
        closed_step: false,
        reverse_prune: true,
    };
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiStats {
    pub tuples: usize,
    pub entries: usize,
    /// Tuples processed by the worklist.
    pub iterations: u64,
    pub pairs_initial: u64,
    pub pairs_final: u64,
}

/// Labelled cop tuples, each with its closed strong-power neighbourhood.
#[derive(Clone, Debug)]
pub struct Tuples {
    n: usize,
    k: usize,
    /// `nbr[T]`: every `T2 ∈ N[T]`, ascending.
    nbr: Vec<Vec<u32>>,
    /// `offset[T]`: index of entry `(T, nbr[T][0])`.
    offset: Vec<usize>,
}

impl Tuples {
    fn new(g: &Graph, k: usize) -> Self {
        let n = g.n();
        let total = n.pow(k as u32);
        let closed: Vec<Vec<Vertex>> = (0..n).map(|v| g.closed_neighbors(v)).collect();
        let mut nbr = Vec::with_capacity(total);
        let mut offset = Vec::with_capacity(total + 1);
        let mut acc = 0;
        for t in 0..total {
            let mut out = vec![0u32];
            let mut place = 1u32;
            for &v in &decode(t, n, k) {
                out = out
                    .iter()
                    .flat_map(|&p| closed[v].iter().map(move |&w| p + w as u32 * place))
                    .collect();
                place *= n as u32;
            }
            out.sort_unstable();
            offset.push(acc);
            acc += out.len();
            nbr.push(out);
        }
        offset.push(acc);
        Tuples { n, k, nbr, offset }
    }

    pub fn len(&self) -> usize {
        self.nbr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nbr.is_empty()
    }

    pub fn vertices(&self, t: usize) -> Vec<Vertex> {
        decode(t, self.n, self.k)
    }

    pub fn neighbors(&self, t: usize) -> &[u32] {
        &self.nbr[t]
    }

    /// Entry index of the move `(t1, t2)`.
    pub fn entry(&self, t1: usize, t2: usize) -> Option<usize> {
        self.nbr[t1].binary_search(&(t2 as u32)).ok().map(|i| self.offset[t1] + i)
    }

    fn entries(&self) -> usize {
        self.offset[self.len()]
    }
}

fn decode(mut t: usize, n: usize, k: usize) -> Vec<Vertex> {
    (0..k)
        .map(|_| {
            let v = t % n;
            t /= n;
            v
        })
        .collect()
}

/// `S_T`: vertices `r` off the cops from which some single cop move leaves
/// the robber no legal response. Passing loses iff a cop lands on `r`;
/// stepping to `x` loses if a cop ends on `x` or a cop moved `x -> r`.
pub fn surroundable_set(g: &Graph, cops: &[Vertex]) -> u64 {
    let n = g.n();
    let mut out = 0u64;
    let closed: Vec<Vec<Vertex>> = cops.iter().map(|&c| g.closed_neighbors(c)).collect();
    for r in (0..n).filter(|r| !cops.contains(r)) {
        // Each cop either lands on a vertex of N[r] (covering it, and
        // blocking its origin if it lands on r) or is irrelevant.
        let targets = g.closed_neighbors(r);
        let mut reach = vec![0u64];
        for (i, &c) in cops.iter().enumerate() {
            let mut next = Vec::new();
            for &mask in &reach {
                next.push(mask);
                for &w in &closed[i] {
                    if targets.contains(&w) {
                        let mut m = mask | 1 << w;
                        if w == r && c != r {
                            m |= 1 << c;
                        }
                        next.push(m);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            reach = next;
        }
        let need: u64 = targets.iter().fold(0, |a, &w| a | 1 << w);
        if reach.iter().any(|&m| m & need == need && m >> r & 1 == 1) {
            out |= 1 << r;
        }
    }
    out
}

/// ψ over every cop move, as bitsets over `(r1, r2)` pairs.
#[derive(Clone, Debug)]
pub struct PsiMap {
    n: usize,
    words: usize,
    tuples: Tuples,
    bits: Vec<u64>,
    options: PsiOptions,
    stats: PsiStats,
}

impl PsiMap {
    /// Every robber move that does not lose at once.
    pub fn init(g: &Graph, k: usize, options: PsiOptions, budget: u64) -> Result<Self, PsiError> {
        if k == 0 {
            return Err(PsiError::NoCops);
        }
        if !g.is_connected() {
            return Err(PsiError::Disconnected);
        }
        let n = g.n();
        if n > MAX_VERTICES {
            return Err(PsiError::TooLarge);
        }
        let words = (n * n).div_ceil(64);
        let d = (g.max_degree() + 1) as f64;
        let estimated = (n as f64).powi(k as i32) * d.powi(k as i32) * words as f64;
        if estimated > budget as f64 {
            return Err(PsiError::Budget {
                estimated: estimated.min(u64::MAX as f64) as u64,
                budget,
            });
        }
        let tuples = Tuples::new(g, k);
        let blocked: Vec<u64> = (0..tuples.len())
            .map(|t| {
                let v = tuples.vertices(t);
                v.iter().fold(surroundable_set(g, &v), |a, &c| a | 1 << c)
            })
            .collect();
        let step: Vec<u64> = (0..n)
            .map(|r| {
                let s = g.neighbors(r).iter().fold(0u64, |a, &w| a | 1 << w);
                if options.closed_step {
                    s | 1 << r
                } else {
                    s
                }
            })
            .collect();
        let mut bits = vec![0u64; tuples.entries() * words];
        let mut pairs = 0u64;
        for t1 in 0..tuples.len() {
            let v1 = tuples.vertices(t1);
            for (i, &t2) in tuples.nbr[t1].iter().enumerate() {
                let t2 = t2 as usize;
                let v2 = tuples.vertices(t2);
                let e = (tuples.offset[t1] + i) * words;
                for r1 in (0..n).filter(|&r| blocked[t1] >> r & 1 == 0) {
                    let x = (0..v1.len()).filter(|&j| v2[j] == r1).fold(0u64, |a, j| a | 1 << v1[j]);
                    let mut ok = step[r1] & !blocked[t2] & !x;
                    while ok != 0 {
                        let r2 = ok.trailing_zeros() as usize;
                        ok &= ok - 1;
                        let b = r1 * n + r2;
                        bits[e + b / 64] |= 1 << (b % 64);
                        pairs += 1;
                    }
                }
            }
        }
        let stats = PsiStats {
            tuples: tuples.len(),
            entries: tuples.entries(),
            pairs_initial: pairs,
            pairs_final: pairs,
            iterations: 0,
        };
        Ok(PsiMap {
            n,
            words,
            tuples,
            bits,
            options,
            stats,
        })
    }

    pub fn tuples(&self) -> &Tuples {
        &self.tuples
    }

    pub fn stats(&self) -> &PsiStats {
        &self.stats
    }

    fn slot(&self, e: usize) -> &[u64] {
        &self.bits[e * self.words..(e + 1) * self.words]
    }

    /// Robber moves stored for entry `e`.
    pub fn pairs(&self, e: usize) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (w, &word) in self.slot(e).iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let b = w * 64 + x.trailing_zeros() as usize;
                x &= x - 1;
                out.push((b / self.n, b % self.n));
            }
        }
        out
    }

    pub fn contains(&self, e: usize, r1: Vertex, r2: Vertex) -> bool {
        let b = r1 * self.n + r2;
        self.bits[e * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn firsts(&self, e: usize) -> u64 {
        self.pairs(e).iter().fold(0, |a, &(r1, _)| a | 1 << r1)
    }

    fn seconds(&self, e: usize) -> u64 {
        self.pairs(e).iter().fold(0, |a, &(_, r2)| a | 1 << r2)
    }

    /// Keeps the pairs of entry `e` whose first entry is in `first` and
    /// second entry in `second`. Returns whether anything was removed.
    fn restrict(&mut self, e: usize, first: u64, second: u64) -> bool {
        let n = self.n;
        let mut changed = false;
        for (r1, r2) in self.pairs(e) {
            if first >> r1 & 1 == 0 || second >> r2 & 1 == 0 {
                let b = r1 * n + r2;
                self.bits[e * self.words + b / 64] &= !(1 << (b % 64));
                changed = true;
            }
        }
        changed
    }

    /// Greatest fixed point of the pruning rules, by worklist.
    pub fn refine(&mut self) {
        let total = self.tuples.len();
        let mut queued = vec![true; total];
        let mut queue: VecDeque<usize> = (0..total).collect();
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        while let Some(t) = queue.pop_front() {
            queued[t] = false;
            self.stats.iterations += 1;
            let nbrs = self.tuples.nbr[t].clone();
            // Second entries of moves into t must start every move out of t.
            let mut ahead = all;
            for &t3 in &nbrs {
                let e = self.tuples.entry(t, t3 as usize).expect("closed neighbourhood");
                ahead &= self.firsts(e);
            }
            let mut behind = all;
            if self.options.reverse_prune {
                for &t1 in &nbrs {
                    let e = self.tuples.entry(t1 as usize, t).expect("symmetric");
                    behind &= self.seconds(e);
                }
            }
            for &t1 in &nbrs {
                let e = self.tuples.entry(t1 as usize, t).expect("symmetric");
                if self.restrict(e, all, ahead) && !queued[t1 as usize] {
                    queued[t1 as usize] = true;
                    queue.push_back(t1 as usize);
                }
            }
            for &t3 in &nbrs {
                let e = self.tuples.entry(t, t3 as usize).expect("closed neighbourhood");
                if self.restrict(e, behind, all) && !queued[t3 as usize] {
                    queued[t3 as usize] = true;
                    queue.push_back(t3 as usize);
                }
            }
        }
        self.stats.pairs_final = self.bits.iter().map(|w| w.count_ones() as u64).sum();
    }

    /// Some cop move leaves the robber nothing.
    pub fn has_empty_entry(&self) -> bool {
        (0..self.tuples.entries()).any(|e| self.slot(e).iter().all(|&w| w == 0))
    }

    pub fn is_subset_of(&self, other: &PsiMap) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Removes every pair not in `keep(entry, r1, r2)`.
    pub fn retain(&mut self, mut keep: impl FnMut(usize, Vertex, Vertex) -> bool) {
        for e in 0..self.tuples.entries() {
            for (r1, r2) in self.pairs(e) {
                if !keep(e, r1, r2) {
                    let b = r1 * self.n + r2;
                    self.bits[e * self.words + b / 64] &= !(1 << (b % 64));
                }
            }
        }
    }

    /// Conditions (ii) and (iii) hold for every stored pair.
    pub fn is_closed(&self) -> bool {
        let mut copy = self.clone();
        copy.refine();
        copy.bits == self.bits
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiVerdict {
    /// `c_cr(G) <= k`.
    pub cops_win: bool,
    pub stats: PsiStats,
}

/// Decides `c_cr(G) <= k` from the refined ψ.
pub fn check_ccr_le_k(g: &Graph, k: usize, options: PsiOptions, budget: u64) -> Result<PsiVerdict, PsiError> {
    let mut psi = PsiMap::init(g, k, options, budget)?;
    psi.refine();
    Ok(PsiVerdict {
        cops_win: psi.has_empty_entry(),
        stats: psi.stats.clone(),
    })
}
