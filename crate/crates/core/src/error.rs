use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("partition {partition} does not fit in the {rows}x{cols} rectangle")]
    OutsideRectangle {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("unsupported parity: {0}")]
    Parity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkewSymmetric { row: usize, col: usize },

    #[error("plane partition array is not self-complementary")]
    NotSelfComplementary,

    #[error("invalid plane partition array: {0}")]
    InvalidArray(String),

    #[error("work budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("non-integral intermediate value: {0}")]
    NonIntegral(String),
}

impl Error {
    /// Stable machine-readable code used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotContained { .. } => "not_contained",
            Error::OutsideRectangle { .. } => "outside_rectangle",
            Error::Parity(_) => "bad_parity",
            Error::Precondition(_) => "precondition",
            Error::Dimension { .. } => "dimension_mismatch",
            Error::NotSkewSymmetric { .. } => "not_skew_symmetric",
            Error::NotSelfComplementary => "not_self_complementary",
            Error::InvalidArray(_) => "invalid_array",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::NonIntegral(_) => "non_integral",
        }
    }
}
