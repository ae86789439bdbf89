//! `param`: parameter search or a fixed-k solve, reported as JSON.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::Result;
use cheatbot_core::cache::{SolveCache, VerdictRecord};
use cheatbot_core::engine::{BodyguardOptions, Ruleset};
use cheatbot_core::graph::{degeneracy, Graph};
use cheatbot_core::solver::{
    bodyguard_number, cheating_robot_number, push_number, solve, surrounding_number, ParameterValue, SolveError,
    SolveOptions,
};
use cheatbot_core::suite::SCHEMA_VERSION;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::input::GraphDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Ccr,
    Sigma,
    Bodyguard,
    Push,
    All,
}

impl Which {
    fn wants(self, w: Which) -> bool {
        self == Which::All || self == w
    }
}

/// Verdict of one solve at a fixed number of cops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedSolve {
    pub game: String,
    pub k: usize,
    pub cop_win: bool,
    pub placement: Option<Vec<usize>>,
    pub rounds: Option<u16>,
    /// Least push budget that still wins, for the push game.
    pub push_budget: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub graph: GraphDescriptor,
    pub n: usize,
    pub m: usize,
    pub degeneracy: usize,
    pub bodyguard_options: BodyguardOptions,
    pub c_cr: Option<ParameterValue>,
    pub sigma: Option<ParameterValue>,
    pub bodyguard: Option<ParameterValue>,
    pub push_cr: Option<ParameterValue>,
    pub fixed: Vec<FixedSolve>,
    /// Wall time per parameter or fixed solve, in milliseconds.
    pub wall_ms: BTreeMap<String, u64>,
    /// Entries answered from the solve cache.
    pub cached: Vec<String>,
}

pub struct Context<'a> {
    pub g: &'a Graph,
    pub opts: SolveOptions,
    pub options: BodyguardOptions,
    pub cache: Option<SolveCache>,
}

impl Context<'_> {
    /// Looks `key` up in the cache, else computes and stores it.
    fn cached<T: Serialize + serde::de::DeserializeOwned>(
        &self,
        name: &str,
        key: String,
        report: &mut Report,
        compute: impl FnOnce() -> Result<T, SolveError>,
    ) -> Result<T, SolveError> {
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get::<T>(&key)) {
            report.cached.push(name.to_string());
            report.wall_ms.insert(name.to_string(), 0);
            return Ok(hit);
        }
        let start = Instant::now();
        let value = compute()?;
        report.wall_ms.insert(name.to_string(), start.elapsed().as_millis() as u64);
        if let Some(c) = &self.cache {
            // the cache is advisory; a failed write only costs a recompute
            let _ = c.put(&key, &value);
        }
        Ok(value)
    }

    fn key(&self, kind: &str, extra: impl Serialize) -> String {
        SolveCache::key(kind, self.g, &extra)
    }
}

pub fn run(ctx: &Context, descriptor: GraphDescriptor, which: Which, cops: Option<usize>) -> Result<Report> {
    let g = ctx.g;
    let mut report = Report {
        schema: SCHEMA_VERSION,
        tool: "cheatbot".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        graph: descriptor,
        n: g.n(),
        m: g.m(),
        degeneracy: degeneracy(g).k,
        bodyguard_options: ctx.options,
        c_cr: None,
        sigma: None,
        bodyguard: None,
        push_cr: None,
        fixed: Vec::new(),
        wall_ms: BTreeMap::new(),
        cached: Vec::new(),
    };
    match cops {
        Some(k) => fixed(ctx, which, k, &mut report)?,
        None => search(ctx, which, &mut report)?,
    }
    Ok(report)
}

fn search(ctx: &Context, which: Which, report: &mut Report) -> Result<()> {
    let (g, opts, options) = (ctx.g, &ctx.opts, ctx.options);
    if which.wants(Which::Ccr) || which.wants(Which::Push) {
        let key = ctx.key("param", "c_cr");
        report.c_cr = Some(ctx.cached("c_cr", key, report, || Ok(cheating_robot_number(g, opts)?.0))?);
    }
    if which.wants(Which::Sigma) {
        let key = ctx.key("param", "sigma");
        report.sigma = Some(ctx.cached("sigma", key, report, || Ok(surrounding_number(g, opts)?.0))?);
    }
    if which.wants(Which::Bodyguard) {
        let key = ctx.key("param", ("bodyguard", options));
        report.bodyguard = Some(ctx.cached("bodyguard", key, report, || Ok(bodyguard_number(g, options, opts)?.0))?);
    }
    if which.wants(Which::Push) {
        let c = report.c_cr.as_ref().map(|v| v.value).expect("computed above");
        let key = ctx.key("param", ("push_cr", c));
        report.push_cr = Some(ctx.cached("push_cr", key, report, || Ok(push_number(g, c, opts)?.0))?);
    }
    if which == Which::Push {
        report.c_cr = None;
    }
    Ok(())
}

fn fixed(ctx: &Context, which: Which, k: usize, report: &mut Report) -> Result<()> {
    let games = [
        (Which::Ccr, "cheating_robot", Ruleset::cheating_robot()),
        (Which::Sigma, "surrounding", Ruleset::surrounding()),
        (Which::Bodyguard, "bodyguard", Ruleset::bodyguard(ctx.options)),
    ];
    for (w, name, rules) in games {
        if !which.wants(w) {
            continue;
        }
        let key = ctx.key("verdict", (name, k, rules));
        let v: VerdictRecord = ctx.cached(name, key, report, || {
            let r = solve(ctx.g, k, &rules, &ctx.opts)?;
            Ok(VerdictRecord {
                cop_win: r.cop_win,
                placement: r.placement,
                rounds: r.rounds,
            })
        })?;
        report.fixed.push(FixedSolve {
            game: name.to_string(),
            k,
            cop_win: v.cop_win,
            placement: v.placement,
            rounds: v.rounds,
            push_budget: None,
        });
    }
    if which.wants(Which::Push) {
        let key = ctx.key("verdict", ("push", k));
        let (win, pv): (VerdictRecord, Option<ParameterValue>) = ctx.cached("push", key, report, || {
            let r = solve(ctx.g, k, &Ruleset::cheating_robot(), &ctx.opts)?;
            let pv = if r.cop_win { Some(push_number(ctx.g, k, &ctx.opts)?.0) } else { None };
            Ok((
                VerdictRecord {
                    cop_win: r.cop_win,
                    placement: r.placement,
                    rounds: r.rounds,
                },
                pv,
            ))
        })?;
        report.fixed.push(FixedSolve {
            game: "push".to_string(),
            k,
            cop_win: win.cop_win,
            placement: pv.as_ref().map(|p| p.certificate.placement.clone()),
            rounds: pv.as_ref().and_then(|p| p.certificate.rounds),
            push_budget: pv.map(|p| p.value),
        });
    }
    Ok(())
}
