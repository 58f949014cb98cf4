use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: needed {needed} but budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default budget for explicit subspace enumeration.
pub const SUBSPACE_ENUMERATION_BUDGET: u128 = 1_000_000;

/// Default budget for the search solvers (min-rank and the generic
/// stable-rank search). Sized so that every band-functor instance coming
/// from a graph on up to five vertices completes.
pub const SEARCH_BUDGET: u128 = 50_000_000;
