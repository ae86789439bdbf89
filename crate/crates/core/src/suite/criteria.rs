//! One check per regression criterion.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::{ccr, cop_win, pcr, run, sigma, CriterionResult, SuiteConfig, SuiteResult};
use crate::fixtures;
use crate::graph::{double_subdivision, metrics, product, Graph, GraphFamily, ProductKind};
use crate::psi::{check_ccr_le_k, PsiOptions};
use crate::solver::{self, scripted_cycle_strategy, SolveError, Variant};

/// Seed for the random graphs of the subdivision structure check.
pub const DS_SEED: u64 = 0x05ee_d0d5;
pub const DS_SAMPLES: usize = 200;
pub const DS_MAX_N: usize = 12;

fn gen(f: GraphFamily) -> Graph {
    f.generate().expect("valid family parameters")
}

pub fn tree_characterization(cfg: &SuiteConfig) -> CriterionResult {
    run(1, "tree characterization", |r| {
        let graphs = fixtures::connected_graphs(cfg.max_n);
        let outcomes: Result<Vec<(bool, bool)>, SolveError> = graphs
            .par_iter()
            .map(|g| Ok((metrics(g).is_tree, cop_win(g, 1, cfg)?)))
            .collect();
        let outcomes = outcomes?;
        let bad = outcomes.iter().filter(|(tree, win)| tree != win).count();
        let trees = outcomes.iter().filter(|o| o.0).count();
        r.note(format!(
            "{} connected graphs on <= {} vertices, {trees} trees, {bad} disagree with c_cr = 1 iff tree",
            graphs.len(),
            cfg.max_n
        ));
        r.value("graphs", graphs.len());
        r.value("trees", trees);
        r.value("mismatches", bad);
        Ok(bad == 0)
    })
}

pub fn cycles(cfg: &SuiteConfig) -> CriterionResult {
    run(2, "cycles", |r| {
        let mut ok = true;
        let mut rows = Vec::new();
        for n in 3..=10 {
            let g = gen(GraphFamily::Cycle(n));
            let c = ccr(&g, cfg)?;
            let p = pcr(&g, c, cfg)?;
            let pincer = scripted_cycle_strategy(n).verify();
            let good = c == 2 && p == 0 && pincer.all_captured && pincer.pushes == 0 && pincer.max_rounds <= 2 * n;
            ok &= good;
            rows.push((n, c, p, pincer.max_rounds));
            if !good {
                r.note(format!("C{n}: c_cr {c}, p_cr {p}, pincer {pincer:?}"));
            }
        }
        r.detail.insert(0, "c_cr(C_n) = 2 and p_cr(C_n) = 0 for n = 3..10; two-cop pincer never pushes".into());
        r.value("n_ccr_pcr_pincer_rounds", rows);
        Ok(ok)
    })
}

pub fn complete_and_multipartite(cfg: &SuiteConfig) -> CriterionResult {
    run(3, "complete and multipartite", |r| {
        let mut cases: Vec<(String, Graph, usize)> = (3..=7)
            .map(|n| (format!("K{n}"), gen(GraphFamily::Complete(n)), n - 1))
            .collect();
        cases.push(("K2,3".into(), gen(GraphFamily::CompleteMultipartite(vec![2, 3])), 2));
        cases.push(("K2,2,2".into(), gen(GraphFamily::CompleteMultipartite(vec![2, 2, 2])), 4));
        let mut ok = true;
        let mut rows = Vec::new();
        for (name, g, want) in &cases {
            let c = ccr(g, cfg)?;
            let p = pcr(g, c, cfg)?;
            if c != *want || p != 0 {
                ok = false;
                r.note(format!("{name}: c_cr {c} (want {want}), p_cr {p}"));
            }
            rows.push((name.clone(), c, p));
        }
        r.detail.insert(0, "c_cr(K_n) = n-1, c_cr(K2,3) = 2, c_cr(K2,2,2) = 4, all with p_cr = 0".into());
        r.value("name_ccr_pcr", rows);
        Ok(ok)
    })
}

pub fn girth_witness(cfg: &SuiteConfig) -> CriterionResult {
    run(4, "girth witness (Heawood)", |r| {
        let g = fixtures::heawood();
        let res = solver::solve_pursuit(&g, 3, Variant::Cheating, &cfg.solve_options())?;
        r.value("three_cops_win", res.cop_win);
        r.value("placement", &res.placement);
        r.value("rounds", res.rounds);
        if res.cop_win {
            r.note(format!(
                "3 cops win on Heawood from {:?} within {} rounds, so c_cr = 3, not >= 4",
                res.placement.as_deref().unwrap_or(&[]),
                res.rounds.unwrap_or(0)
            ));
        } else {
            r.note("3 cops lose on Heawood, so c_cr >= 4");
        }
        Ok(!res.cop_win)
    })
}

pub fn subgraph_counterexample(cfg: &SuiteConfig) -> CriterionResult {
    run(5, "subgraph counterexample", |r| {
        let cg = ccr(&fixtures::fig1_g(), cfg)?;
        let ch = ccr(&fixtures::fig1_h(), cfg)?;
        r.note(format!("c_cr(G) = {cg}, c_cr(H) = {ch} for H a subgraph of G"));
        r.value("ccr_g", cg);
        r.value("ccr_h", ch);
        Ok(cg == 2 && ch >= 3)
    })
}

pub fn push_witnesses(cfg: &SuiteConfig) -> CriterionResult {
    run(6, "push witnesses", |r| {
        let f2 = fixtures::fig2();
        let c2 = ccr(&f2, cfg)?;
        let p2 = pcr(&f2, c2, cfg)?;
        let f3 = fixtures::fig3();
        let c3 = ccr(&f3, cfg)?;
        let s3 = sigma(&f3, cfg)?;
        let p3 = pcr(&f3, c3, cfg)?;
        r.note(format!(
            "fig2: c_cr {c2}, p_cr {p2}; fig3: c_cr {c3}, sigma {s3}, p_cr {p3}, sigma < c_cr + p_cr: {}",
            s3 < c3 + p3
        ));
        r.value("fig2", (c2, p2));
        r.value("fig3", (c3, s3, p3));
        Ok(c2 == 2 && p2 >= 1 && c3 == 2 && s3 == 2 && p3 >= 1 && s3 < c3 + p3)
    })
}

pub fn inequality_chain(cfg: &SuiteConfig) -> CriterionResult {
    run(7, "inequality chain", |r| {
        let graphs = fixtures::connected_graphs(cfg.max_n);
        let rows: Result<Vec<_>, SolveError> = graphs
            .par_iter()
            .map(|g| {
                let c = ccr(g, cfg)?;
                let s = sigma(g, cfg)?;
                let p = pcr(g, c, cfg)?;
                Ok((crate::graph::degeneracy(g).k, c, s, p))
            })
            .collect();
        let rows = rows?;
        let bad: Vec<_> = graphs
            .iter()
            .zip(&rows)
            .filter(|(_, &(d, c, s, p))| !(d <= c && c <= s && s <= c + p && p <= c))
            .collect();
        for (g, row) in bad.iter().take(5) {
            r.note(format!("violated on {:?}: (degeneracy, c_cr, sigma, p_cr) = {row:?}", g.edges()));
        }
        let strict = rows.iter().filter(|&&(_, c, s, _)| c < s).count();
        r.detail.insert(
            0,
            format!(
                "{} graphs: degeneracy <= c_cr <= sigma <= c_cr + p_cr and p_cr <= c_cr; {} violations, {strict} with c_cr < sigma",
                graphs.len(),
                bad.len()
            ),
        );
        r.value("graphs", graphs.len());
        r.value("violations", bad.len());
        Ok(bad.is_empty())
    })
}

pub fn bodyguard_calibration(cfg: &SuiteConfig) -> CriterionResult {
    run(8, "bodyguard calibration", |r| {
        let row = super::calibration_checks(crate::engine::BodyguardOptions::default(), cfg)?;
        for line in &row.mismatches {
            r.note(line.clone());
        }
        r.detail.insert(
            0,
            format!(
                "default options: cycles {}, trees {}, P3xP3 {}",
                pass_word(row.cycles_ok),
                pass_word(row.trees_ok),
                pass_word(row.king_ok)
            ),
        );
        r.value("cycle_values", &row.cycle_values);
        r.value("king_value", row.king_value);
        Ok(row.cycles_ok && row.trees_ok && row.king_ok)
    })
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "mismatch"
    }
}

/// Named product instances with their expected `c_cr`.
pub fn product_cases() -> Vec<(String, Graph, usize)> {
    let p = |n| gen(GraphFamily::Path(n));
    let c = |n| gen(GraphFamily::Cycle(n));
    let k = |n| gen(GraphFamily::Complete(n));
    let s = ProductKind::Strong;
    let l = ProductKind::Lexicographic;
    vec![
        ("C3xP2".into(), product(&c(3), &p(2), s), 5),
        ("C4xP2".into(), product(&c(4), &p(2), s), 5),
        ("C3xP3".into(), product(&c(3), &p(3), s), 5),
        ("C3xC3".into(), product(&c(3), &c(3), s), 8),
        ("C3xC4".into(), product(&c(3), &c(4), s), 8),
        ("K2xP3".into(), product(&k(2), &p(3), s), 3),
        ("K2xC3".into(), product(&k(2), &c(3), s), 5),
        ("K2xK3".into(), product(&k(2), &k(3), s), 5),
        ("P2.P2".into(), product(&p(2), &p(2), l), 3),
        ("P3.P2".into(), product(&p(3), &p(2), l), 3),
        ("C3.P2".into(), product(&c(3), &p(2), l), 5),
        ("P2.C3".into(), product(&p(2), &c(3), l), 5),
        ("C3.C3".into(), product(&c(3), &c(3), l), 8),
    ]
}

pub fn product_equalities(cfg: &SuiteConfig) -> CriterionResult {
    run(9, "product equalities", |r| {
        let cases = product_cases();
        let got: Result<Vec<usize>, SolveError> = cases.par_iter().map(|(_, g, _)| ccr(g, cfg)).collect();
        let got = got?;
        let mut ok = true;
        let mut rows = Vec::new();
        for ((name, _, want), c) in cases.iter().zip(got) {
            if c != *want {
                ok = false;
                r.note(format!("{name}: c_cr {c}, expected {want}"));
            }
            rows.push((name.clone(), c));
        }
        r.detail.insert(0, format!("{} strong and lexicographic products checked", cases.len()));
        r.value("ccr", rows);
        Ok(ok)
    })
}

pub fn grid_bounds(cfg: &SuiteConfig) -> CriterionResult {
    run(10, "grid bounds", |r| {
        let p3 = gen(GraphFamily::Path(3));
        let grid = product(&p3, &p3, ProductKind::Strong);
        let c = ccr(&grid, cfg)?;
        let s = sigma(&grid, cfg)?;
        let torus = product(&gen(GraphFamily::Cycle(3)), &gen(GraphFamily::Cycle(4)), ProductKind::Strong);
        let st = sigma(&torus, cfg)?;
        r.note(format!("c_cr(P3xP3) = {c} (<= 4), sigma(P3xP3) = {s} (<= 5), sigma(C3xC4) = {st} (= 8)"));
        r.value("ccr_grid", c);
        r.value("sigma_grid", s);
        r.value("sigma_c3c4", st);
        Ok(c <= 4 && s <= 5 && st == 8)
    })
}

pub fn cartesian_bound(cfg: &SuiteConfig) -> CriterionResult {
    run(11, "cartesian bound", |r| {
        let base: Vec<(&str, Graph)> = vec![
            ("P3", gen(GraphFamily::Path(3))),
            ("P4", gen(GraphFamily::Path(4))),
            ("C3", gen(GraphFamily::Cycle(3))),
            ("C4", gen(GraphFamily::Cycle(4))),
            ("K3", gen(GraphFamily::Complete(3))),
            ("K1,3", gen(GraphFamily::Star(3))),
        ];
        let singles: Result<Vec<usize>, SolveError> = base.iter().map(|(_, g)| ccr(g, cfg)).collect();
        let singles = singles?;
        let pairs: Vec<(usize, usize)> = (0..base.len()).flat_map(|i| (i..base.len()).map(move |j| (i, j))).collect();
        let values: Result<Vec<usize>, SolveError> = pairs
            .par_iter()
            .map(|&(i, j)| ccr(&product(&base[i].1, &base[j].1, ProductKind::Cartesian), cfg))
            .collect();
        let values = values?;
        let mut ok = true;
        let mut rows = Vec::new();
        for (&(i, j), &v) in pairs.iter().zip(&values) {
            let bound = singles[i] + singles[j];
            if v > bound {
                ok = false;
                r.note(format!("{} □ {}: c_cr {v} > {bound}", base[i].0, base[j].0));
            }
            rows.push((format!("{}□{}", base[i].0, base[j].0), v, bound));
        }
        r.detail.insert(0, format!("{} pairs: c_cr(G□H) <= c_cr(G) + c_cr(H)", pairs.len()));
        r.value("product_ccr_bound", rows);
        Ok(ok)
    })
}

pub fn family_samples(cfg: &SuiteConfig) -> CriterionResult {
    run(12, "double-subdivided hypercube samples", |r| {
        let g3 = gen(GraphFamily::DsHypercube(2));
        let g4 = gen(GraphFamily::DsHypercube(3));
        let lose3 = !cop_win(&g3, 2, cfg)?;
        let lose4 = !cop_win(&g4, 3, cfg)?;
        let exact3 = ccr(&g3, cfg)?;
        r.note(format!(
            "DS(C4): 2 cops lose {lose3}, c_cr = {exact3}; DS(Q3): 3 cops lose {lose4}"
        ));
        r.value("ccr_ds_c4", exact3);
        r.value("ds_q3_three_lose", lose4);
        Ok(lose3 && lose4)
    })
}

pub fn icosahedron_lower_bound(cfg: &SuiteConfig) -> CriterionResult {
    run(13, "DS(icosahedron) lower bound", |r| {
        let g = double_subdivision(&gen(GraphFamily::Icosahedron));
        let lose = !cop_win(&g, 3, cfg)?;
        r.note(format!("{} vertices: 3 cops lose {lose}", g.n()));
        r.value("vertices", g.n());
        r.value("three_lose", lose);
        let mut ok = g.n() == 72 && lose;
        if cfg.long {
            let four = cop_win(&g, 4, cfg)?;
            r.note(format!("4 cops win {four}"));
            r.value("four_win", four);
            ok &= four;
        }
        Ok(ok)
    })
}

/// The graphs and cop counts on which the ψ check is compared with the solver.
pub fn psi_cases() -> Vec<(String, Graph, usize)> {
    let mut cases = Vec::new();
    for (i, g) in fixtures::connected_graphs(6).into_iter().enumerate() {
        for k in 1..=2 {
            cases.push((format!("corpus#{i}"), g.clone(), k));
        }
    }
    for n in 3..=8 {
        cases.push((format!("C{n}"), gen(GraphFamily::Cycle(n)), 2));
    }
    for k in 2..=3 {
        cases.push(("fig1-g".into(), fixtures::fig1_g(), k));
        cases.push(("fig1-h".into(), fixtures::fig1_h(), k));
    }
    cases
}

pub fn psi_equivalence(cfg: &SuiteConfig) -> CriterionResult {
    run(14, "fixed-point check equivalence", |r| {
        let cases = psi_cases();
        let bad: Result<Vec<Option<String>>, SolveError> = cases
            .par_iter()
            .map(|(name, g, k)| {
                let want = cop_win(g, *k, cfg)?;
                let got = check_ccr_le_k(g, *k, PsiOptions::default(), cfg.budget)
                    .map_err(|e| SolveError::Unsupported(e.to_string()))?
                    .cops_win;
                Ok((got != want).then(|| format!("{name} k={k}: fixed point says {got}, solver {want}")))
            })
            .collect();
        let bad: Vec<String> = bad?.into_iter().flatten().collect();
        r.note(format!("{} cases, {} disagreements", cases.len(), bad.len()));
        for b in bad.iter().take(5) {
            r.note(b.clone());
        }
        r.value("cases", cases.len());
        r.value("disagreements", bad.len());
        Ok(bad.is_empty())
    })
}

/// Random graphs for the subdivision structure check.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::from_edges(n, &edges).expect("simple graph")
        })
        .collect()
}

pub fn ds_structure(_cfg: &SuiteConfig) -> CriterionResult {
    run(15, "double subdivision structure", |r| {
        let graphs = random_graphs(DS_SEED, DS_SAMPLES, DS_MAX_N);
        let mut bad = 0;
        for g in &graphs {
            let ds = double_subdivision(g);
            let originals = |v: usize| ds.neighbors(v).iter().filter(|&&w| w < g.n()).count();
            let ok = ds.n() == g.n() + 2 * g.m() && metrics(&ds).is_bipartite && (0..ds.n()).all(|v| originals(v) < 3);
            if !ok {
                bad += 1;
                r.note(format!("failed on {:?}", g.edges()));
            }
        }
        r.detail.insert(
            0,
            format!("{} random graphs (seed {DS_SEED:#x}): order n + 2m, bipartite, no vertex next to 3 originals; {bad} failures", graphs.len()),
        );
        r.value("graphs", graphs.len());
        r.value("failures", bad);
        Ok(bad == 0)
    })
}

/// Every criterion, in order.
pub fn regression_suite(cfg: &SuiteConfig) -> SuiteResult {
    let checks: [fn(&SuiteConfig) -> CriterionResult; 15] = [
        tree_characterization,
        cycles,
        complete_and_multipartite,
        girth_witness,
        subgraph_counterexample,
        push_witnesses,
        inequality_chain,
        bodyguard_calibration,
        product_equalities,
        grid_bounds,
        cartesian_bound,
        family_samples,
        icosahedron_lower_bound,
        psi_equivalence,
        ds_structure,
    ];
    SuiteResult::new("paper", checks.iter().map(|c| c(cfg)).collect())
}
