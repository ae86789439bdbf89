//! Retrograde analysis for the cheating-robot, surrounding and push games.
//!
//! A collective cop move is split into a chain of single-cop moves. Chain
//! node `(M, U, r)` holds the cops that have already moved (`M`), those
//! that have not (`U`) and the robber vertex `r`; the smallest token of `U`
//! always moves next, so every collective move is reached along exactly one
//! chain per outcome. Level `j = |M|`: level 0 is the cop-turn position and
//! level `k` is the robber-turn position, which is never stored.
//!
//! The first cop to arrive on `r` from neighbour `v` is recorded as a
//! dedicated token, so the set of traversed edges into `r` is part of `M`
//! and the chain needs no side table.
//!
//! Cop-turn positions carry a rank: the number of rounds the cops need to
//! capture against best defence. Ranks are found layer by layer. A
//! robber-turn position becomes winning in the layer in which the last of
//! its robber responses is ranked; a backward search from it then marks
//! chain nodes and ranks the cop-turn positions that reach it.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{SolveError, SolveStats};
use crate::graph::{Graph, Vertex};
use crate::multiset::{Binomials, Multisets, Token};

pub const MAX_COPS: usize = 16;
/// Largest vertex degree supported by the traversal bookkeeping.
const MAX_DEGREE: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Variant {
    Cheating,
    Surround,
    /// Cheating robot where at most `budget` distinct cops may push.
    Push { budget: usize },
}

#[derive(Clone, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: u64) -> Self {
        Bits(vec![0; len.div_ceil(64) as usize])
    }

    #[inline]
    fn get(&self, i: u64) -> bool {
        (self.0[(i >> 6) as usize] >> (i & 63)) & 1 == 1
    }

    /// Sets bit `i`; returns whether it was previously clear.
    #[inline]
    fn set(&mut self, i: u64) -> bool {
        let w = &mut self.0[(i >> 6) as usize];
        let b = 1u64 << (i & 63);
        let fresh = *w & b == 0;
        *w |= b;
        fresh
    }
}

/// Fixed-capacity sorted token buffer.
#[derive(Clone, Copy)]
struct Buf {
    t: [Token; MAX_COPS],
    len: usize,
}

impl Buf {
    fn from(s: &[Token]) -> Self {
        let mut t = [0; MAX_COPS];
        t[..s.len()].copy_from_slice(s);
        Buf { t, len: s.len() }
    }

    fn as_slice(&self) -> &[Token] {
        &self.t[..self.len]
    }

    fn without(s: &[Token], i: usize) -> Self {
        let mut b = Buf::from(&s[..i]);
        b.t[i..s.len() - 1].copy_from_slice(&s[i + 1..]);
        b.len = s.len() - 1;
        b
    }

    fn with_front(first: Token, rest: &[Token]) -> Self {
        let mut b = Buf::from(&[first]);
        b.t[1..=rest.len()].copy_from_slice(rest);
        b.len = rest.len() + 1;
        b
    }

    fn with_sorted(s: &[Token], x: Token) -> Self {
        let pos = s.partition_point(|&y| y <= x);
        let mut b = Buf::from(&s[..pos]);
        b.t[pos] = x;
        b.t[pos + 1..=s.len()].copy_from_slice(&s[pos..]);
        b.len = s.len() + 1;
        b
    }
}

/// One optimal collective cop move read off the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainMove {
    /// `(from, to)` token per cop, in chain order.
    pub steps: Vec<(Token, Token)>,
    /// Cop tokens after the move, sorted.
    pub cops: Vec<Token>,
    /// Vertices `v` with a cop moving `v -> robber`.
    pub forbidden: Vec<Vertex>,
    /// Rank of the robber-turn position reached (0 means capture now).
    pub rank: u16,
}

#[derive(Clone, Debug)]
pub struct PursuitTable {
    n: usize,
    k: usize,
    variant: Variant,
    /// Unmoved-cop alphabet: vertices, or `2v + pushed` in the push game.
    alpha: usize,
    closed: Vec<Vec<Vertex>>,
    open: Vec<Vec<Vertex>>,
    /// `slot[r * n + v]`: index of `v` in `open[r]`, or `u8::MAX`.
    slot: Vec<u8>,
    binom: Binomials,
    num_unmoved: Vec<u64>,
    won: Vec<Bits>,
    head_rank: Vec<u16>,
    popped: Bits,
    next: Vec<u64>,
    phase: u16,
    occ: Vec<u8>,
    stats: SolveStats,
}

impl PursuitTable {
    pub fn solve(g: &Graph, k: usize, variant: Variant, budget: u64) -> Result<Self, SolveError> {
        let start = Instant::now();
        let n = g.n();
        if k > MAX_COPS {
            return Err(SolveError::Unsupported(format!("at most {MAX_COPS} cops are supported")));
        }
        if g.max_degree() > MAX_DEGREE {
            return Err(SolveError::Unsupported(format!("maximum degree above {MAX_DEGREE}")));
        }
        let push = matches!(variant, Variant::Push { .. });
        let alpha = if push { 2 * n } else { n };
        let alpha_moved = match variant {
            Variant::Surround => alpha,
            _ => alpha + g.max_degree(),
        };
        if alpha_moved >= Token::MAX as usize {
            return Err(SolveError::Unsupported("graph too large".into()));
        }
        let binom = Binomials::for_multisets(alpha_moved, k);
        let num_moved: Vec<u64> = (0..=k).map(|j| binom.multisets(alpha_moved, j)).collect();
        let num_unmoved: Vec<u64> = (0..=k).map(|j| binom.multisets(alpha, j)).collect();

        let closed_total: usize = (0..n).map(|v| g.degree(v) + 1).sum();
        let mean_closed = closed_total as f64 / n as f64;
        let nodes_plain: f64 = (0..k)
            .map(|j| binom.multisets(alpha, j) as f64 * num_unmoved[k - j] as f64 * n as f64)
            .sum();
        let estimated = (nodes_plain * mean_closed).min(u64::MAX as f64) as u64;
        let index_bits: f64 = (1..k)
            .map(|j| num_moved[j] as f64 * num_unmoved[k - j] as f64 * n as f64)
            .sum::<f64>()
            + num_unmoved[k] as f64 * n as f64 * 17.0;
        // Memory cap of 4 GiB of tables, expressed in transitions.
        let memory_cap_bits = 32.0 * (1u64 << 30) as f64;
        if estimated > budget || index_bits > memory_cap_bits {
            return Err(SolveError::Budget {
                estimated: estimated.max((index_bits / 8.0) as u64),
                budget,
            });
        }

        let mut slot = vec![u8::MAX; n * n];
        for r in 0..n {
            for (i, &v) in g.neighbors(r).iter().enumerate() {
                slot[r * n + v] = i as u8;
            }
        }
        let heads = num_unmoved[k] * n as u64;
        let won = (0..=k)
            .map(|j| {
                if j == 0 || j == k {
                    Bits::new(0)
                } else {
                    Bits::new(num_moved[j] * num_unmoved[k - j] * n as u64)
                }
            })
            .collect();
        let mut table = PursuitTable {
            n,
            k,
            variant,
            alpha,
            closed: (0..n).map(|v| g.closed_neighbors(v)).collect(),
            open: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            slot,
            binom,
            num_unmoved,
            won,
            head_rank: vec![0; heads as usize],
            popped: Bits::new(heads),
            next: Vec::new(),
            phase: 0,
            occ: vec![0; n],
            stats: SolveStats {
                states: index_bits as u64,
                transitions: estimated,
                ..SolveStats::default()
            },
        };
        table.seed();
        while !table.next.is_empty() {
            table.phase += 1;
            let layer = std::mem::take(&mut table.next);
            for h in layer {
                table.pop(h);
            }
        }
        table.stats.iterations = table.phase as u64;
        table.stats.wall_ms = start.elapsed().as_millis() as u64;
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    fn push(&self) -> bool {
        matches!(self.variant, Variant::Push { .. })
    }

    fn surround(&self) -> bool {
        self.variant == Variant::Surround
    }

    #[inline]
    pub fn vertex(&self, t: Token) -> Vertex {
        if self.push() {
            (t >> 1) as Vertex
        } else {
            t as Vertex
        }
    }

    #[inline]
    pub fn token(&self, v: Vertex, pushed: bool) -> Token {
        if self.push() {
            (2 * v + pushed as usize) as Token
        } else {
            v as Token
        }
    }

    #[inline]
    fn pushed(&self, t: Token) -> bool {
        self.push() && t & 1 == 1
    }

    fn flagged(&self, cops: &[Token]) -> usize {
        cops.iter().filter(|&&t| self.pushed(t)).count()
    }

    fn over_budget(&self, cops: &[Token]) -> bool {
        match self.variant {
            Variant::Push { budget } => self.flagged(cops) > budget,
            _ => false,
        }
    }

    fn fill_occ(&mut self, cops: &[Token]) {
        self.occ.fill(0);
        for &t in cops {
            let v = self.vertex(t);
            self.occ[v] += 1;
        }
    }

    #[inline]
    fn head_index(&self, cops: &[Token], r: Vertex) -> u64 {
        self.binom.rank(cops) * self.n as u64 + r as u64
    }

    #[inline]
    fn node_index(&self, m: &[Token], u: &[Token], r: Vertex) -> u64 {
        (self.binom.rank(m) * self.num_unmoved[u.len()] + self.binom.rank(u)) * self.n as u64 + r as u64
    }

    fn surround_holds(&self, r: Vertex) -> bool {
        self.open[r].iter().all(|&v| self.occ[v] > 0)
    }

    fn seed(&mut self) {
        let n = self.n;
        for t2 in Multisets::new(self.alpha, self.k) {
            self.fill_occ(&t2);
            for r in 0..n {
                if self.surround() {
                    if self.surround_holds(r) {
                        self.back(&t2, &[], r);
                    }
                    continue;
                }
                if self.occ[r] == 0 {
                    continue;
                }
                // Capture: every free neighbour was the source of a cop
                // arriving on `r`, and the robber cannot stay.
                let mut need = 0u64;
                for (i, &v) in self.open[r].iter().enumerate() {
                    if self.occ[v] == 0 {
                        need |= 1 << i;
                    }
                }
                let all = (1u64 << self.open[r].len()) - 1;
                self.trigger_with_extras(&t2, r, need, all & !need);
            }
        }
    }

    /// Triggers `(t2, r, need | x)` for every `x` within `extras` that
    /// keeps the forbidden set nonempty and within the number of cops on `r`.
    fn trigger_with_extras(&mut self, t2: &[Token], r: Vertex, need: u64, extras: u64) {
        let at_r = t2.iter().filter(|&&t| self.vertex(t) == r).count();
        if self.push() && t2.iter().any(|&t| self.vertex(t) == r && !self.pushed(t)) {
            return;
        }
        let need_size = need.count_ones() as usize;
        if need_size > at_r {
            return;
        }
        let mut subsets = Vec::new();
        subsets_upto(extras, at_r - need_size, &mut subsets);
        for x in subsets {
            let d = need | x;
            if d != 0 {
                self.trigger(t2, r, d);
            }
        }
    }

    /// Robber-turn position `(t2, r, d)` is cop-winning: search backward.
    fn trigger(&mut self, t2: &[Token], r: Vertex, d: u64) {
        let mut m = Buf::from(t2);
        if d != 0 {
            // Replace `|d|` of the cops on `r` by first-arrival tokens.
            let first = t2.iter().position(|&t| self.vertex(t) == r).expect("cop on r");
            let size = d.count_ones() as usize;
            let mut b = Buf::from(&t2[..first]);
            b.t[first..t2.len() - size].copy_from_slice(&t2[first + size..]);
            b.len = t2.len() - size;
            let mut bits = d;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                b.t[b.len] = (self.alpha + i) as Token;
                b.len += 1;
            }
            m = b;
        }
        self.back(m.as_slice(), &[], r);
    }

    /// Visits every chain predecessor of `(m, u, r)`.
    fn back(&mut self, m: &[Token], u: &[Token], r: Vertex) {
        let umin = u.first().copied().unwrap_or(Token::MAX);
        let alpha = self.alpha as Token;
        for i in 0..m.len() {
            let d = m[i];
            if i > 0 && m[i - 1] == d {
                continue;
            }
            let rest = Buf::without(m, i);
            let rest_rank = self.binom.rank(rest.as_slice());
            let mut sources = [0 as Token; 2 * (MAX_DEGREE + 1)];
            let mut count = 0;
            let mut add = |s: Token| {
                sources[count] = s;
                count += 1;
            };
            let two = if self.push() { 2 } else { 1 };
            if d >= alpha {
                let vs = self.open[r][(d - alpha) as usize];
                for f in 0..two {
                    add(self.token(vs, f == 1));
                }
            } else if !self.surround() && self.vertex(d) == r {
                // A later arrival from a neighbour that already sent a cop.
                for &e in m.iter().filter(|&&e| e >= alpha) {
                    let vs = self.open[r][(e - alpha) as usize];
                    for f in 0..two {
                        add(self.token(vs, f == 1));
                    }
                }
            } else {
                let flag = self.pushed(d);
                for &vs in &self.closed[self.vertex(d)] {
                    if vs != r {
                        add(self.token(vs, flag));
                    }
                }
            }
            for &s in &sources[..count] {
                if s > umin {
                    continue;
                }
                let up = Buf::with_front(s, u);
                self.visit(rest.as_slice(), rest_rank, up.as_slice(), r);
            }
        }
    }

    fn visit(&mut self, m: &[Token], m_rank: u64, u: &[Token], r: Vertex) {
        if m.is_empty() {
            let h = self.head_index(u, r);
            if self.head_rank[h as usize] == 0 {
                self.head_rank[h as usize] = self.phase + 1;
                self.next.push(h);
                self.stats.won += 1;
            }
            return;
        }
        let idx = (m_rank * self.num_unmoved[u.len()] + self.binom.rank(u)) * self.n as u64 + r as u64;
        if self.won[m.len()].set(idx) {
            self.stats.won += 1;
            self.back(m, u, r);
        }
    }

    /// Processes a freshly ranked cop-turn position: every robber-turn
    /// position whose responses are now all ranked becomes winning.
    fn pop(&mut self, h: u64) {
        self.popped.set(h);
        let n = self.n as u64;
        let r1 = (h % n) as Vertex;
        let ru = h / n;
        let mut t2 = [0 as Token; MAX_COPS];
        self.binom.unrank(ru, &mut t2[..self.k]);
        let t2 = &t2[..self.k];
        if self.over_budget(t2) {
            return;
        }
        self.fill_occ(t2);
        let closed = self.closed[r1].clone();
        for r in closed {
            let all_popped = |tbl: &Self| {
                tbl.closed[r]
                    .iter()
                    .all(|&x| tbl.occ[x] > 0 || tbl.popped.get(ru * n + x as u64))
            };
            if self.surround() {
                if !self.surround_holds(r) && all_popped(self) {
                    self.back(t2, &[], r);
                }
                continue;
            }
            if self.occ[r] == 0 {
                if all_popped(self) {
                    self.back(t2, &[], r);
                }
                continue;
            }
            // Cops sit on r: r1 is a neighbour and must stay allowed.
            let mut need = 0u64;
            for (i, &x) in self.open[r].iter().enumerate() {
                if x != r1 && self.occ[x] == 0 && !self.popped.get(ru * n + x as u64) {
                    need |= 1 << i;
                }
            }
            let all = (1u64 << self.open[r].len()) - 1;
            let own = 1u64 << self.slot[r * self.n + r1];
            self.trigger_with_extras(t2, r, need, all & !need & !own);
        }
    }

    /// Rank of cop-turn position `(cops, r)`; `None` if the robber wins.
    pub fn head_rank(&self, cops: &[Token], r: Vertex) -> Option<u16> {
        debug_assert!(cops.windows(2).all(|w| w[0] <= w[1]));
        match self.head_rank[self.head_index(cops, r) as usize] {
            0 => None,
            x => Some(x),
        }
    }

    /// Rank of robber-turn position `(cops, r, forbidden)`: 0 for an
    /// immediate win, `None` if the robber wins or the move is illegal
    /// under the push budget.
    pub fn robber_turn_rank(&self, cops: &[Token], r: Vertex, forbidden: &[Vertex]) -> Option<u16> {
        let occupied = |v: Vertex| cops.iter().any(|&t| self.vertex(t) == v);
        if self.surround() && self.open[r].iter().all(|&v| occupied(v)) {
            return Some(0);
        }
        let allowed = self.allowed(cops, r, forbidden);
        if allowed.is_empty() {
            return Some(0);
        }
        if self.over_budget(cops) {
            return None;
        }
        let mut worst = 0;
        for x in allowed {
            worst = worst.max(self.head_rank(cops, x)?);
        }
        Some(worst)
    }

    /// Legal robber moves from `(cops, r, forbidden)`, ascending.
    pub fn allowed(&self, cops: &[Token], r: Vertex, forbidden: &[Vertex]) -> Vec<Vertex> {
        let occupied = |v: Vertex| cops.iter().any(|&t| self.vertex(t) == v);
        self.closed[r]
            .iter()
            .copied()
            .filter(|&x| !occupied(x) && (self.surround() || x == r || !forbidden.contains(&x)))
            .collect()
    }

    /// Rounds to capture from the placement `cops` against the best
    /// robber start; `None` if some start escapes.
    pub fn placement_rank(&self, cops: &[Token]) -> Option<u16> {
        let mut worst = 0;
        for r in 0..self.n {
            if cops.iter().any(|&t| self.vertex(t) == r) {
                continue;
            }
            worst = worst.max(self.head_rank(cops, r)?);
        }
        Some(worst)
    }

    /// Winning placement (unpushed cops) with the fewest rounds, ties
    /// broken lexicographically.
    pub fn best_placement(&self) -> Option<(Vec<Vertex>, u16)> {
        let mut best: Option<(Vec<Vertex>, u16)> = None;
        for m in Multisets::new(self.n, self.k) {
            let tokens: Vec<Token> = m.iter().map(|&v| self.token(v as Vertex, false)).collect();
            if let Some(rank) = self.placement_rank(&tokens) {
                if best.as_ref().is_none_or(|b| rank < b.1) {
                    best = Some((m.iter().map(|&v| v as Vertex).collect(), rank));
                }
            }
        }
        best
    }

    /// An optimal cop move from a cop-winning position.
    pub fn cop_move(&self, cops: &[Token], r: Vertex) -> Option<ChainMove> {
        let rank = self.head_rank(cops, r)?;
        let mut steps = Vec::with_capacity(self.k);
        self.forward(&[], cops, r, rank - 1, &mut steps)
    }

    fn forward(
        &self,
        m: &[Token],
        u: &[Token],
        r: Vertex,
        limit: u16,
        steps: &mut Vec<(Token, Token)>,
    ) -> Option<ChainMove> {
        let alpha = self.alpha as Token;
        if u.is_empty() {
            let (cops, forbidden) = self.decode(m, r);
            let rank = self.robber_turn_rank(&cops, r, &forbidden)?;
            return (rank <= limit).then(|| ChainMove {
                steps: steps.clone(),
                cops,
                forbidden,
                rank,
            });
        }
        let s = u[0];
        let vs = self.vertex(s);
        for &vd in &self.closed[vs] {
            let (d, shown) = if vd == r && !self.surround() {
                let e = alpha + self.slot[r * self.n + vs] as Token;
                let plain = self.token(r, true);
                (if m.contains(&e) { plain } else { e }, plain)
            } else {
                let t = self.token(vd, self.pushed(s));
                (t, t)
            };
            let next = Buf::with_sorted(m, d);
            let rest = &u[1..];
            if !rest.is_empty() {
                let idx = self.node_index(next.as_slice(), rest, r);
                if !self.won[next.len].get(idx) {
                    continue;
                }
            }
            steps.push((s, shown));
            if let Some(found) = self.forward(next.as_slice(), rest, r, limit, steps) {
                return Some(found);
            }
            steps.pop();
        }
        None
    }

    fn decode(&self, m: &[Token], r: Vertex) -> (Vec<Token>, Vec<Vertex>) {
        let alpha = self.alpha as Token;
        let mut cops = Vec::with_capacity(m.len());
        let mut forbidden = Vec::new();
        for &t in m {
            if t >= alpha {
                forbidden.push(self.open[r][(t - alpha) as usize]);
                cops.push(self.token(r, true));
            } else {
                cops.push(t);
            }
        }
        cops.sort_unstable();
        forbidden.sort_unstable();
        (cops, forbidden)
    }

    /// Per-head rank table (0 = robber wins), indexed by
    /// `rank(cops) * n + r`. Identical across runs.
    pub fn raw_ranks(&self) -> &[u16] {
        &self.head_rank
    }
}

/// All submasks of `mask` with at most `max` bits set.
fn subsets_upto(mask: u64, max: usize, out: &mut Vec<u64>) {
    let bits: Vec<u32> = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
    fn rec(bits: &[u32], max: usize, cur: u64, out: &mut Vec<u64>) {
        out.push(cur);
        if max == 0 {
            return;
        }
        for (i, &b) in bits.iter().enumerate() {
            rec(&bits[i + 1..], max - 1, cur | 1 << b, out);
        }
    }
    rec(&bits, max, 0, out);
}
