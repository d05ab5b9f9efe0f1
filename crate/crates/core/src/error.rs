use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("rewriting exceeded the step budget of {budget} swaps (malformed relation table?)")]
    StepBudgetExceeded { budget: u64 },

    #[error("malformed relation table: {0}")]
    MalformedTable(String),

    #[error("expected a polynomial in tau alone, got {0}")]
    NotPureTau(String),

    #[error("element lies outside the subalgebra generated by e, f, h, x, y: {0}")]
    OutsideSubalgebra(String),

    #[error("mixed generator orders in one expression")]
    OrderMismatch,

    #[error("extraction of F and G failed: {0}")]
    Extraction(String),

    #[error("no solution within the degree bound: {0}")]
    NoSolution(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
