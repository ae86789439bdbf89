//! `cheatbot`: exact solvers for cops and cheating robot, surrounding cops
//! and robbers, and bodyguards and presidents.

mod bench;
mod exit;
mod input;
mod param;
mod trace;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use cheatbot_core::cache::SolveCache;
use cheatbot_core::engine::BodyguardOptions;
use cheatbot_core::graph::{degeneracy, serialize_edgelist};
use cheatbot_core::solver::{SolveOptions, DEFAULT_BUDGET};
use cheatbot_core::suite::SuiteConfig;
use clap::{ArgAction, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "cheatbot", version, about = "Exact solvers for pursuit games on small graphs")]
struct Cli {
    /// Worker threads for parallel suites; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Refuse solves estimated above this many transitions.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Bypass the solve cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cache directory (default: $CHEATBOT_CACHE_DIR, else a temp directory).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write the main output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph as an edge list.
    Gen {
        /// e.g. `cycle 7`, `ds-icosahedron`, `product strong cycle:4 path:3`
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
    },
    /// Compute graph parameters.
    Param {
        #[arg(value_enum)]
        which: param::Which,
        /// Edge-list file, fixture name or family spec.
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
        /// Solve at this many cops instead of searching.
        #[arg(long)]
        cops: Option<usize>,
        #[command(flatten)]
        bodyguard: BodyguardArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Largest corpus graph order (at most 7).
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Include long-running checks.
        #[arg(long)]
        long: bool,
        /// Print every detail line.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Export a best-play trace.
    Trace {
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
        /// cheating, surround or push:B
        #[arg(long, default_value = "cheating")]
        game: trace::GameArg,
        #[arg(long, short)]
        cops: usize,
        /// Comma-separated cop start vertices (default: best placement).
        #[arg(long, value_delimiter = ',')]
        cop_start: Option<Vec<usize>>,
        /// Robber start vertex (default: the longest-surviving start).
        #[arg(long)]
        robber_start: Option<usize>,
        /// Also write DOT frames to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Time the solver and the fixed-point check over a sweep, as CSV.
    Bench {
        /// `family:LO..HI`, `random-tree:LO..HI` or a single graph
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
        #[arg(long, short, default_value_t = 1)]
        cops: usize,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, value_enum, default_value = "both")]
        engine: bench::Engine,
        /// Seed for random sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(clap::Args, Debug)]
struct BodyguardArgs {
    /// Let the president share a vertex with a guard.
    #[arg(long, action = ArgAction::Set, default_value_t = BodyguardOptions::default().co_location)]
    co_location: bool,
    /// Place guards before the president.
    #[arg(long, action = ArgAction::Set, default_value_t = BodyguardOptions::default().guards_first)]
    guards_first: bool,
}

impl Cli {
    fn opts(&self) -> SolveOptions {
        SolveOptions {
            budget: self.budget.unwrap_or(DEFAULT_BUDGET),
        }
    }

    fn cache(&self) -> Option<SolveCache> {
        if self.no_cache {
            return None;
        }
        Some(match &self.cache_dir {
            Some(d) => SolveCache::new(d),
            None => SolveCache::from_env(std::env::temp_dir().join("cheatbot-cache")),
        })
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match &cli.command {
        Command::Gen { graph } => {
            let loaded = input::load(graph)?;
            let g = &loaded.graph;
            let summary = format!("n {} m {} degeneracy {}", g.n(), g.m(), degeneracy(g).k);
            match &cli.out {
                Some(_) => {
                    cli.emit(&serialize_edgelist(g))?;
                    println!("{summary}");
                }
                None => {
                    print!("{}", serialize_edgelist(g));
                    eprintln!("{summary}");
                }
            }
        }
        Command::Param {
            which,
            graph,
            cops,
            bodyguard,
        } => {
            let loaded = input::load(graph)?;
            let ctx = param::Context {
                g: &loaded.graph,
                opts: cli.opts(),
                options: BodyguardOptions {
                    co_location: bodyguard.co_location,
                    guards_first: bodyguard.guards_first,
                },
                cache: cli.cache(),
            };
            let report = param::run(&ctx, loaded.descriptor, *which, *cops)?;
            cli.emit(&json(&report))?;
        }
        Command::Verify {
            suite,
            max_n,
            long,
            verbose,
        } => {
            let cfg = SuiteConfig {
                budget: cli.budget.unwrap_or(SuiteConfig::default().budget),
                max_n: *max_n,
                long: *long,
            };
            if *max_n > 7 {
                anyhow::bail!("--max-n is at most 7");
            }
            let result = verify::run(*suite, &cfg);
            let text = if cli.json { json(&result) } else { verify::text(&result, *verbose) };
            cli.emit(&text)?;
            if !verify::succeeded(&result) {
                return Err(exit::CheckFailed(format!("{} checks failed", result.failed)).into());
            }
        }
        Command::Trace {
            graph,
            game,
            cops,
            cop_start,
            robber_start,
            dot,
        } => {
            let loaded = input::load(graph)?;
            let report = trace::run(
                &loaded.graph,
                loaded.descriptor,
                game.0,
                *cops,
                cop_start.clone(),
                *robber_start,
                &cli.opts(),
            )?;
            if let Some(path) = dot {
                fs::write(path, trace::dot_frames(&loaded.graph, &report))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            cli.emit(&json(&report))?;
        }
        Command::Bench {
            graph,
            cops,
            reps,
            engine,
            seed,
        } => {
            let graphs = bench::sweep(graph, *seed)?;
            let mut buf = Vec::new();
            bench::run(&graphs, *cops, *reps, *engine, &cli.opts(), &mut buf)?;
            cli.emit(&String::from_utf8(buf).expect("csv is utf-8"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            let code = exit::code(&e);
            if code != exit::CHECK_FAILED {
                eprintln!("error: {e:#}");
            } else {
                eprintln!("{e}");
            }
            ExitCode::from(code)
        }
    }
}
