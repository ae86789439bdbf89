//! Independent brute-force oracles for solver-derived values.
//!
//! The pursuit oracle iterates a plain least fixed point over labelled cop
//! tuples. The bodyguard oracle evaluates the nested fixed point of a
//! co-Büchi objective directly, with no attractor machinery.

use cheatbot_core::engine::BodyguardOptions;
use cheatbot_core::fixtures;
use cheatbot_core::graph::{double_subdivision, product, Graph, GraphFamily, ProductKind};
use cheatbot_core::solver::{
    cheating_robot_number, solve_pursuit, surrounding_number, BodyguardTable, SolveOptions,
    Variant,
};
use proptest::prelude::*;

fn closed(g: &Graph, v: usize) -> Vec<usize> {
    let mut out = vec![v];
    out.extend_from_slice(g.neighbors(v));
    out
}

fn decode(mut x: usize, n: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let v = x % n;
            x /= n;
            v
        })
        .collect()
}

fn encode(t: &[usize], n: usize) -> usize {
    t.iter().rev().fold(0, |acc, &v| acc * n + v)
}

/// All labelled tuples reachable from `t` in one cop move.
fn tuple_moves(g: &Graph, t: &[usize]) -> Vec<Vec<usize>> {
    t.iter().fold(vec![Vec::new()], |acc, &c| {
        let opts = closed(g, c);
        acc.iter()
            .flat_map(|p| {
                opts.iter().map(move |&w| {
                    let mut q = p.clone();
                    q.push(w);
                    q
                })
            })
            .collect()
    })
}

/// Whether `k` cops win the cheating-robot (or surrounding) game on `g`.
fn pursuit_oracle(g: &Graph, k: usize, surround: bool) -> bool {
    let n = g.n();
    let count = n.pow(k as u32);
    let moves: Vec<Vec<Vec<usize>>> = (0..count).map(|x| tuple_moves(g, &decode(x, n, k))).collect();
    let mut win = vec![false; count * n];
    loop {
        let mut changed = false;
        for x in 0..count {
            let t1 = decode(x, n, k);
            for r in 0..n {
                if win[x * n + r] || t1.contains(&r) {
                    continue;
                }
                let good = moves[x].iter().any(|t2| {
                    if surround && g.neighbors(r).iter().all(|w| t2.contains(w)) {
                        return true;
                    }
                    let y = encode(t2, n);
                    closed(g, r).into_iter().all(|s| {
                        let blocked = t2.contains(&s);
                        let swapped = !surround && s != r && (0..k).any(|i| t1[i] == s && t2[i] == r);
                        blocked || swapped || win[y * n + s]
                    })
                });
                if good {
                    win[x * n + r] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (0..count).any(|x| {
        let t = decode(x, n, k);
        (0..n).all(|r| t.contains(&r) || win[x * n + r])
    })
}

fn oracle_number(g: &Graph, surround: bool) -> usize {
    (1..=g.n()).find(|&k| pursuit_oracle(g, k, surround)).unwrap()
}

/// Whether `k` guards win on `g` under `options`.
fn bodyguard_oracle(g: &Graph, k: usize, options: BodyguardOptions) -> bool {
    let n = g.n();
    let count = n.pow(k as u32);
    let half = count * n;
    let tuples: Vec<Vec<usize>> = (0..count).map(|x| decode(x, n, k)).collect();
    let valid = |x: usize, p: usize| options.co_location || !tuples[x].contains(&p);
    // Node `x * n + p` is president to move, `half + x * n + p` guards to move.
    let succ: Vec<Vec<usize>> = (0..2 * half)
        .map(|node| {
            let (x, p) = ((node % half) / n, node % n);
            if node < half {
                closed(g, p).into_iter().filter(|&q| valid(x, q)).map(|q| half + x * n + q).collect()
            } else {
                tuple_moves(g, &tuples[x])
                    .iter()
                    .map(|t| encode(t, n))
                    .filter(|&y| valid(y, p))
                    .map(|y| y * n + p)
                    .collect()
            }
        })
        .collect();
    let safe = |node: usize| {
        let (x, p) = ((node % half) / n, node % n);
        node >= half || g.neighbors(p).iter().all(|w| tuples[x].contains(w))
    };
    let is_valid = |node: usize| valid((node % half) / n, node % n);
    // Guards controllably reach `target`.
    let cpre = |node: usize, target: &[bool]| {
        if node < half {
            succ[node].iter().all(|&s| target[s])
        } else {
            succ[node].iter().any(|&s| target[s])
        }
    };
    // mu X. nu Y. (safe & cpre(Y)) | cpre(X)
    let mut x = vec![false; 2 * half];
    loop {
        let mut y: Vec<bool> = (0..2 * half).map(is_valid).collect();
        loop {
            let next: Vec<bool> = (0..2 * half)
                .map(|v| is_valid(v) && ((safe(v) && cpre(v, &y)) || cpre(v, &x)))
                .collect();
            if next == y {
                break;
            }
            y = next;
        }
        if y == x {
            break;
        }
        x = y;
    }
    if options.guards_first {
        (0..count).any(|gx| (0..n).filter(|&p| valid(gx, p)).all(|p| x[half + gx * n + p]))
    } else {
        (0..n).all(|p| (0..count).any(|gx| valid(gx, p) && x[gx * n + p]))
    }
}

fn opts() -> SolveOptions {
    SolveOptions { budget: u64::MAX }
}

fn strong(a: &Graph, b: &Graph) -> Graph {
    product(a, b, ProductKind::Strong)
}

#[test]
fn heawood_three_cops_win() {
    let g = fixtures::heawood();
    assert!(!pursuit_oracle(&g, 2, false));
    assert!(pursuit_oracle(&g, 3, false));
    assert!(solve_pursuit(&g, 3, Variant::Cheating, &opts()).unwrap().cop_win);
}

#[test]
fn fig1_h_exact_value() {
    let h = fixtures::fig1_h();
    let want = oracle_number(&h, false);
    assert_eq!(want, 3);
    assert_eq!(cheating_robot_number(&h, &opts()).unwrap().0.value, want);
}

#[test]
fn king_graph_exact_values() {
    let p3 = GraphFamily::Path(3).generate().unwrap();
    let king = strong(&p3, &p3);
    let c = oracle_number(&king, false);
    let s = oracle_number(&king, true);
    assert_eq!((c, s), (3, 4));
    assert_eq!(cheating_robot_number(&king, &opts()).unwrap().0.value, c);
    assert_eq!(surrounding_number(&king, &opts()).unwrap().0.value, s);
}

#[test]
fn ds_c4_exact_value() {
    let g = double_subdivision(&GraphFamily::Cycle(4).generate().unwrap());
    let want = oracle_number(&g, false);
    assert_eq!(want, 3);
    assert_eq!(cheating_robot_number(&g, &opts()).unwrap().0.value, want);
}

#[test]
fn bodyguard_matches_oracle_on_small_graphs() {
    let mut graphs = fixtures::connected_graphs(5);
    graphs.push(GraphFamily::Cycle(6).generate().unwrap());
    for options in BodyguardOptions::all() {
        for g in &graphs {
            for k in 1..=3.min(g.n()) {
                let got = BodyguardTable::solve(g, k, options, u64::MAX).unwrap().winning_placement().is_some();
                assert_eq!(got, bodyguard_oracle(g, k, options), "{options:?} k {k} {:?}", g.edges());
            }
        }
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (3usize..=6, any::<u64>()).prop_filter_map("connected", |(n, bits)| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).ok().filter(|g| g.is_connected())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pursuit_verdicts_match_oracle(g in small_graph(), k in 1usize..=2) {
        for (variant, surround) in [(Variant::Cheating, false), (Variant::Surround, true)] {
            let got = solve_pursuit(&g, k, variant, &opts()).unwrap().cop_win;
            prop_assert_eq!(got, pursuit_oracle(&g, k, surround));
        }
    }

    #[test]
    fn strong_product_matches_definition(a in small_graph(), b in small_graph()) {
        let p = strong(&a, &b);
        let nb = b.n();
        for x in 0..p.n() {
            for y in x + 1..p.n() {
                let (a1, b1, a2, b2) = (x / nb, x % nb, y / nb, y % nb);
                let close_a = a1 == a2 || a.has_edge(a1, a2);
                let close_b = b1 == b2 || b.has_edge(b1, b2);
                prop_assert_eq!(p.has_edge(x, y), close_a && close_b);
            }
        }
    }

    #[test]
    fn winning_is_monotone_in_cops(g in small_graph()) {
        let wins: Vec<bool> = (1..=3)
            .map(|k| solve_pursuit(&g, k, Variant::Cheating, &opts()).unwrap().cop_win)
            .collect();
        prop_assert!(wins.windows(2).all(|w| !w[0] || w[1]));
    }
}
