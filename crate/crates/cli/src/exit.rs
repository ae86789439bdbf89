//! Exit codes: 0 success, 1 check failure, 2 input error, 3 resource budget.

use cheatbot_core::psi::PsiError;
use cheatbot_core::solver::SolveError;

pub const OK: u8 = 0;
pub const CHECK_FAILED: u8 = 1;
pub const INPUT: u8 = 2;
pub const BUDGET: u8 = 3;

/// A failed check that already printed its findings.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct CheckFailed(pub String);

pub fn code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<CheckFailed>() {
            return CHECK_FAILED;
        }
        if let Some(SolveError::Budget { .. }) = cause.downcast_ref::<SolveError>() {
            return BUDGET;
        }
        if let Some(PsiError::Budget { .. }) = cause.downcast_ref::<PsiError>() {
            return BUDGET;
        }
    }
    INPUT
}
