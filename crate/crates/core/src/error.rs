use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("oracle too large: {vars} variables exceed the limit of {max}")]
    OracleTooLarge { vars: usize, max: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// Formula-level search ran out of budget; `partial` generates a
    /// subgroup of the automorphism group.
    #[error("search budget exhausted after {nodes} nodes ({} generators found)", partial.len())]
    BudgetExhausted {
        nodes: u64,
        partial: Vec<crate::symmetry::LitPermutation>,
    },

    /// Graph-level search ran out of budget; `partial` holds the vertex
    /// permutations found so far.
    #[error("graph search budget exhausted after {nodes} nodes ({} generators found)", partial.len())]
    GraphBudgetExhausted { nodes: u64, partial: Vec<Vec<u32>> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
