//! Exhaustive properties over every connected graph up to a given order.

use rayon::prelude::*;

use super::{ccr, pcr, run, sigma, SuiteConfig, SuiteResult};
use crate::fixtures;
use crate::graph::{degeneracy, metrics, Graph};
use crate::solver::{solve_pursuit, SolveError, Variant};

struct Row {
    tree: bool,
    degeneracy: usize,
    ccr: usize,
    sigma: usize,
    pcr: usize,
    /// The optimal `c_cr` placement captures every start in one round.
    one_round: bool,
    /// At least `c_cr + 1` vertices of degree at least `c_cr + 1`.
    many_high: bool,
}

fn row(g: &Graph, cfg: &SuiteConfig) -> Result<Row, SolveError> {
    let c = ccr(g, cfg)?;
    let res = solve_pursuit(g, c, Variant::Cheating, &cfg.solve_options())?;
    let high = (0..g.n()).filter(|&v| g.degree(v) > c).count();
    Ok(Row {
        tree: metrics(g).is_tree,
        degeneracy: degeneracy(g).k,
        ccr: c,
        sigma: sigma(g, cfg)?,
        pcr: pcr(g, c, cfg)?,
        one_round: res.rounds == Some(1),
        many_high: high > c,
    })
}

pub fn corpus_suite(cfg: &SuiteConfig) -> SuiteResult {
    let graphs = fixtures::connected_graphs(cfg.max_n);
    let rows: Result<Vec<Row>, SolveError> = graphs.par_iter().map(|g| row(g, cfg)).collect();
    let rows = match rows {
        Ok(r) => r,
        Err(e) => {
            let failed = run(0, "corpus", |_| Err(e));
            return SuiteResult::new("corpus", vec![failed]);
        }
    };
    let count = |pred: &dyn Fn(&Row) -> bool| rows.iter().filter(|r| pred(r)).count();
    let header = format!("{} connected graphs on <= {} vertices", graphs.len(), cfg.max_n);
    let results = vec![
        run(1, "c_cr = 1 iff tree", |r| {
            let bad = count(&|x| x.tree != (x.ccr == 1));
            r.note(format!("{header}: {bad} violations"));
            Ok(bad == 0)
        }),
        run(2, "degeneracy <= c_cr <= sigma <= c_cr + p_cr", |r| {
            let bad = count(&|x| !(x.degeneracy <= x.ccr && x.ccr <= x.sigma && x.sigma <= x.ccr + x.pcr));
            r.note(format!("{header}: {bad} violations"));
            Ok(bad == 0)
        }),
        run(3, "p_cr <= c_cr", |r| {
            let bad = count(&|x| x.pcr > x.ccr);
            r.note(format!("{header}: {bad} violations"));
            Ok(bad == 0)
        }),
        run(4, "one-round capture implies p_cr = 0", |r| {
            let applicable = count(&|x| x.one_round);
            let bad = count(&|x| x.one_round && x.pcr != 0);
            r.note(format!("{header}: {applicable} applicable, {bad} violations"));
            Ok(bad == 0)
        }),
        run(5, "many high-degree vertices imply p_cr >= 1", |r| {
            let applicable = count(&|x| x.many_high);
            let bad = count(&|x| x.many_high && x.pcr == 0);
            r.note(format!("{header}: {applicable} applicable, {bad} violations"));
            Ok(bad == 0)
        }),
    ];
    SuiteResult::new("corpus", results)
}
