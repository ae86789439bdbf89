//! The four graph parameters, each found by solving with increasing `k`.

use serde::{Deserialize, Serialize};

use super::{solve, solve_pursuit, SolveError, SolveOptions, SolveResult, SolveStats, Variant};
use crate::engine::{BodyguardOptions, Ruleset};
use crate::graph::{degeneracy, Graph, Vertex};

/// Evidence for a parameter value: the winning solve at that value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub k: usize,
    pub placement: Vec<Vertex>,
    /// Rounds to capture from `placement`; absent for the bodyguard game.
    pub rounds: Option<u16>,
    /// Distinct-pusher budget of the solve, push number only.
    pub push_budget: Option<usize>,
    pub stats: SolveStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterValue {
    pub value: usize,
    pub certificate: Certificate,
}

impl ParameterValue {
    fn from_result(value: usize, push_budget: Option<usize>, r: &SolveResult) -> Self {
        ParameterValue {
            value,
            certificate: Certificate {
                k: r.k,
                placement: r.placement.clone().unwrap_or_default(),
                rounds: r.rounds,
                push_budget,
                stats: r.stats().clone(),
            },
        }
    }
}

/// Smallest `k >= start` for which `run(k)` is a cop win. `n` cops always
/// win since no vertex is left for the evader.
fn search(
    g: &Graph,
    start: usize,
    mut run: impl FnMut(usize) -> Result<SolveResult, SolveError>,
) -> Result<(ParameterValue, SolveResult), SolveError> {
    let mut k = start.max(1);
    loop {
        let r = run(k)?;
        if r.cop_win || k >= g.n() {
            return Ok((ParameterValue::from_result(k, None, &r), r));
        }
        k += 1;
    }
}

/// `c_cr(G)`, searching upward from the degeneracy.
pub fn cheating_robot_number(g: &Graph, opts: &SolveOptions) -> Result<(ParameterValue, SolveResult), SolveError> {
    search(g, degeneracy(g).k, |k| solve_pursuit(g, k, Variant::Cheating, opts))
}

/// `σ(G)`, searching upward from the minimum degree.
pub fn surrounding_number(g: &Graph, opts: &SolveOptions) -> Result<(ParameterValue, SolveResult), SolveError> {
    search(g, g.min_degree(), |k| solve_pursuit(g, k, Variant::Surround, opts))
}

/// `B(G)` under the given rule options.
pub fn bodyguard_number(
    g: &Graph,
    options: BodyguardOptions,
    opts: &SolveOptions,
) -> Result<(ParameterValue, SolveResult), SolveError> {
    let rules = Ruleset::bodyguard(options);
    search(g, 1, |k| solve(g, k, &rules, opts))
}

/// `p_cr(G)` with `ccr` cops: the least distinct-pusher budget that still wins.
pub fn push_number(g: &Graph, ccr: usize, opts: &SolveOptions) -> Result<(ParameterValue, SolveResult), SolveError> {
    for p in 0..=ccr {
        let r = solve_pursuit(g, ccr, Variant::Push { budget: p }, opts)?;
        if r.cop_win {
            return Ok((ParameterValue::from_result(p, Some(p), &r), r));
        }
    }
    Err(SolveError::Unsupported(format!("{ccr} cops do not win the unrestricted game")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Which {
    pub ccr: bool,
    pub sigma: bool,
    pub bodyguard: bool,
    pub push: bool,
}

impl Which {
    pub const ALL: Which = Which { ccr: true, sigma: true, bodyguard: true, push: true };
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub graph_hash: String,
    pub n: usize,
    pub m: usize,
    pub degeneracy: usize,
    pub c_cr: Option<ParameterValue>,
    pub sigma: Option<ParameterValue>,
    pub bodyguard: Option<ParameterValue>,
    pub push_cr: Option<ParameterValue>,
}

impl ParameterReport {
    pub fn compute(g: &Graph, which: Which, options: BodyguardOptions, opts: &SolveOptions) -> Result<Self, SolveError> {
        let need_ccr = which.ccr || which.push;
        let c_cr = if need_ccr { Some(cheating_robot_number(g, opts)?.0) } else { None };
        let sigma = if which.sigma { Some(surrounding_number(g, opts)?.0) } else { None };
        let bodyguard = if which.bodyguard { Some(bodyguard_number(g, options, opts)?.0) } else { None };
        let push_cr = match (&c_cr, which.push) {
            (Some(c), true) => Some(push_number(g, c.value, opts)?.0),
            _ => None,
        };
        Ok(ParameterReport {
            graph_hash: g.content_hash(),
            n: g.n(),
            m: g.m(),
            degeneracy: degeneracy(g).k,
            c_cr: if which.ccr { c_cr } else { None },
            sigma,
            bodyguard,
            push_cr,
        })
    }

    /// Violations of `degeneracy <= c_cr <= σ <= c_cr + p_cr` and
    /// `p_cr <= c_cr` among the values present.
    pub fn chain_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let c = self.c_cr.as_ref().map(|v| v.value);
        let s = self.sigma.as_ref().map(|v| v.value);
        let p = self.push_cr.as_ref().map(|v| v.value);
        if let Some(c) = c {
            if self.degeneracy > c {
                out.push(format!("degeneracy {} > c_cr {c}", self.degeneracy));
            }
            if let Some(s) = s {
                if c > s {
                    out.push(format!("c_cr {c} > sigma {s}"));
                }
                if let Some(p) = p {
                    if s > c + p {
                        out.push(format!("sigma {s} > c_cr {c} + p_cr {p}"));
                    }
                }
            }
            if let Some(p) = p {
                if p > c {
                    out.push(format!("p_cr {p} > c_cr {c}"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn gen(f: GraphFamily) -> Graph {
        f.generate().unwrap()
    }

    #[test]
    fn small_values() {
        let o = SolveOptions::default();
        assert_eq!(cheating_robot_number(&gen(GraphFamily::Path(5)), &o).unwrap().0.value, 1);
        assert_eq!(cheating_robot_number(&gen(GraphFamily::Complete(5)), &o).unwrap().0.value, 4);
        assert_eq!(surrounding_number(&gen(GraphFamily::Cycle(7)), &o).unwrap().0.value, 2);
        assert_eq!(surrounding_number(&gen(GraphFamily::Complete(4)), &o).unwrap().0.value, 3);
        assert_eq!(push_number(&gen(GraphFamily::Cycle(8)), 2, &o).unwrap().0.value, 0);
        assert_eq!(push_number(&gen(GraphFamily::Path(5)), 1, &o).unwrap().0.value, 1);
        let b = bodyguard_number(&gen(GraphFamily::Cycle(4)), BodyguardOptions::default(), &o).unwrap();
        assert_eq!(b.0.value, 2);
    }

    #[test]
    fn report_on_c5() {
        let r = ParameterReport::compute(&gen(GraphFamily::Cycle(5)), Which::ALL, BodyguardOptions::default(), &SolveOptions::default())
            .unwrap();
        let v = |p: &Option<ParameterValue>| p.as_ref().unwrap().value;
        assert_eq!((v(&r.c_cr), v(&r.push_cr), v(&r.sigma), v(&r.bodyguard)), (2, 0, 2, 2));
        assert!(r.chain_violations().is_empty());
    }
}
