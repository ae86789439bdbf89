//! Dense ranking of sorted multisets via the combinatorial number system.
//!
//! A multiset `t_0 <= t_1 <= ... <= t_{s-1}` over the alphabet `0..a` maps
//! to the strictly increasing sequence `c_i = t_i + i` and is ranked as
//! `sum C(c_i, i + 1)`, a bijection onto `0..C(a + s - 1, s)`.

pub type Token = u16;

#[derive(Clone, Debug)]
pub struct Binomials {
    /// `table[n * (kmax + 1) + k] = C(n, k)`, saturating at `u64::MAX`.
    table: Vec<u64>,
    kmax: usize,
    nmax: usize,
}

impl Binomials {
    pub fn new(nmax: usize, kmax: usize) -> Self {
        let w = kmax + 1;
        let mut table = vec![0u64; (nmax + 1) * w];
        for n in 0..=nmax {
            table[n * w] = 1;
            for k in 1..=kmax.min(n) {
                let a = table[(n - 1) * w + k - 1];
                let b = table[(n - 1) * w + k];
                table[n * w + k] = a.saturating_add(b);
            }
        }
        Binomials { table, kmax, nmax }
    }

    /// Table large enough for multisets of size `<= size` over `alpha` symbols.
    pub fn for_multisets(alpha: usize, size: usize) -> Self {
        Binomials::new(alpha + size + 1, size + 1)
    }

    pub fn c(&self, n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        debug_assert!(n <= self.nmax && k <= self.kmax, "C({n}, {k}) outside table");
        self.table[n * (self.kmax + 1) + k]
    }

    /// Number of multisets of the given size over `alpha` symbols.
    pub fn multisets(&self, alpha: usize, size: usize) -> u64 {
        if size == 0 {
            1
        } else if alpha == 0 {
            0
        } else {
            self.c(alpha + size - 1, size)
        }
    }

    /// Rank of a sorted token slice.
    #[inline]
    pub fn rank(&self, sorted: &[Token]) -> u64 {
        let w = self.kmax + 1;
        let mut r = 0u64;
        for (i, &t) in sorted.iter().enumerate() {
            r += self.table[(t as usize + i) * w + i + 1];
        }
        r
    }

    /// Inverse of [`Binomials::rank`]; writes `out.len()` sorted tokens.
    pub fn unrank(&self, mut rank: u64, out: &mut [Token]) {
        let s = out.len();
        let mut hi = self.nmax;
        for i in (0..s).rev() {
            // Largest c with C(c, i + 1) <= rank.
            let mut c = hi.min(self.nmax);
            while self.c(c, i + 1) > rank {
                c -= 1;
            }
            rank -= self.c(c, i + 1);
            out[i] = (c - i) as Token;
            hi = c.saturating_sub(1);
        }
    }
}

/// Sorted multisets of a fixed size in lexicographic order.
pub struct Multisets {
    cur: Vec<Token>,
    alpha: usize,
    done: bool,
}

impl Multisets {
    pub fn new(alpha: usize, size: usize) -> Self {
        Multisets {
            cur: vec![0; size],
            alpha,
            done: alpha == 0 && size > 0,
        }
    }
}

impl Iterator for Multisets {
    type Item = Vec<Token>;

    fn next(&mut self) -> Option<Vec<Token>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let last = self.alpha as Token - 1;
        match self.cur.iter().rposition(|&t| t < last) {
            None => self.done = true,
            Some(i) => {
                let v = self.cur[i] + 1;
                self.cur[i..].fill(v);
            }
        }
        Some(out)
    }
}
