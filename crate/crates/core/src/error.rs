use thiserror::Error;

use crate::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed diagram text: {0}")]
    Syntax(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{family} with n = {n} is outside validity range {range}")]
    OutOfRange {
        family: Family,
        n: usize,
        range: &'static str,
    },

    #[error("rank {rank} out of range for degree {n}")]
    RankOutOfRange { rank: usize, n: usize },

    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },

    #[error("budget exceeded: need {needed} but budget is {budget}")]
    BudgetExceeded { needed: String, budget: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),
}
