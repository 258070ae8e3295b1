use thiserror::Error;

/// Errors raised by the exact solvers, generators and self-checking pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural claim that the pipeline proves about its own output failed.
    #[error("claim violated: {0}")]
    ClaimViolation(String),

    /// A step that can only fail when the input does not satisfy the density
    /// hypothesis it was certified to satisfy.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("graph contains K_{r}")]
    NotCliqueFree { r: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop on vertex {vertex} at line {line}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
