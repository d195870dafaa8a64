use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("tensor too large: {rank}^{degree} entries exceed the supported size")]
    TensorTooLarge { rank: usize, degree: usize },

    #[error("Cartan entry c[{row},{col}] undefined: no m <= {m_max} satisfies the Rosso condition")]
    UndefinedCartanEntry { row: usize, col: usize, m_max: u32 },

    #[error("degree {0} is odd; Cartan matrices and Weyl groupoids need even degree")]
    OddDegree(usize),

    #[error("not a generalized Cartan matrix: {0}")]
    NotGeneralizedCartan(String),

    #[error("invalid Cartan row: {0}")]
    InvalidCartanRow(String),

    #[error("Cartan graph closure exceeded {0} objects")]
    ObjectLimitExceeded(usize),

    #[error("Cartan graph axioms violated: {0}")]
    AxiomViolation(String),

    #[error("root closure did not stabilize within {0} reflection rounds")]
    DepthExceeded(usize),

    #[error("no period found within {0} reflection steps")]
    NonPeriodic(usize),

    #[error("not a quiddity cycle: {0}")]
    NotAQuiddityCycle(String),

    #[error("invalid tensor description: {0}")]
    Schema(String),
}
