use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {function} needs {expected}, got {actual}")]
    Dimension {
        function: String,
        expected: String,
        actual: usize,
    },

    #[error("evaluation budget of {max_fes} evaluations exhausted")]
    BudgetExhausted { max_fes: usize },

    #[error("empty evaluation budget")]
    EmptyBudget,

    #[error("no canonical optimum point for {0}")]
    NoCanonicalPoint(String),

    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    #[error("unknown optimizer `{0}`")]
    UnknownOptimizer(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("empty input")]
    EmptyInput,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
