//! Retrograde solvers for the three games and the graph parameters built
//! on them.

mod bodyguard;
mod cycle;
mod params;
mod pursuit;
mod trace;

pub use bodyguard::BodyguardTable;
pub use cycle::{scripted_cycle_strategy, CycleStrategy, CycleVerification};
pub use params::{
    bodyguard_number, cheating_robot_number, push_number, surrounding_number, Certificate, ParameterReport,
    ParameterValue, Which,
};
pub use trace::{best_play_trace, Outcome, Round, Start, Trace};
pub use pursuit::{ChainMove, PursuitTable, Variant, MAX_COPS};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{Game, Ruleset};
use crate::graph::{Graph, Vertex};

/// Default cap on the estimated number of transitions of a single solve.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is disconnected; games are played on connected graphs")]
    Disconnected,
    #[error("at least one cop is required")]
    NoCops,
    #[error("estimated {estimated} transitions exceeds the budget of {budget}")]
    Budget { estimated: u64, budget: u64 },
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error("start position is illegal: {0}")]
    IllegalStart(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Maximum estimated transitions before a solve is refused.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Size of the indexed state space.
    pub states: u64,
    /// Estimated transitions, the quantity the budget is checked against.
    pub transitions: u64,
    /// Positions proven cop-winning.
    pub won: u64,
    /// Retrograde layers (pursuit) or fixed-point rounds (bodyguard).
    pub iterations: u64,
    pub wall_ms: u64,
}

#[derive(Clone, Debug)]
pub enum Table {
    Pursuit(Box<PursuitTable>),
    Bodyguard(BodyguardTable),
}

/// Outcome of one solve at a fixed number of cops.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub k: usize,
    pub rules: Ruleset,
    /// Some placement wins for the cops.
    pub cop_win: bool,
    /// A winning placement with the fewest rounds to capture (pursuit)
    /// or the lexicographically first one (bodyguard).
    pub placement: Option<Vec<Vertex>>,
    /// Rounds to capture from `placement` against the best evader.
    pub rounds: Option<u16>,
    pub table: Table,
}

impl SolveResult {
    pub fn stats(&self) -> &SolveStats {
        match &self.table {
            Table::Pursuit(t) => t.stats(),
            Table::Bodyguard(t) => t.stats(),
        }
    }

    pub fn pursuit(&self) -> Option<&PursuitTable> {
        match &self.table {
            Table::Pursuit(t) => Some(t),
            Table::Bodyguard(_) => None,
        }
    }
}

pub(crate) fn check_input(g: &Graph, k: usize) -> Result<(), SolveError> {
    if k == 0 {
        return Err(SolveError::NoCops);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(())
}

/// Solves one game with `k` cops (or guards).
pub fn solve(g: &Graph, k: usize, rules: &Ruleset, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    match rules.game {
        Game::CheatingRobot => solve_pursuit(g, k, Variant::Cheating, opts),
        Game::Surrounding => solve_pursuit(g, k, Variant::Surround, opts),
        Game::Bodyguard => {
            check_input(g, k)?;
            let table = BodyguardTable::solve(g, k, rules.bodyguard, opts.budget)?;
            let placement = table.winning_placement();
            Ok(SolveResult {
                k,
                rules: *rules,
                cop_win: placement.is_some(),
                placement,
                rounds: None,
                table: Table::Bodyguard(table),
            })
        }
    }
}

/// Solves the cheating-robot, surrounding or budgeted push game.
pub fn solve_pursuit(g: &Graph, k: usize, variant: Variant, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    check_input(g, k)?;
    let table = PursuitTable::solve(g, k, variant, opts.budget)?;
    let best = table.best_placement();
    let rules = match variant {
        Variant::Surround => Ruleset::surrounding(),
        _ => Ruleset::cheating_robot(),
    };
    Ok(SolveResult {
        k,
        rules,
        cop_win: best.is_some(),
        rounds: best.as_ref().map(|b| b.1),
        placement: best.map(|b| b.0),
        table: Table::Pursuit(Box::new(table)),
    })
}
