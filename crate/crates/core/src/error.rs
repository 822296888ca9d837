use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not a prime below 65536")]
    InvalidModulus(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("partition size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("modules live over different groups or fields: {0}")]
    ModuleMismatch(String),

    #[error("malformed partition {0:?}")]
    MalformedPartition(String),

    #[error("partition {0} is not {1}-regular")]
    NotRegular(String, u32),

    #[error("partition {0} is not {1}-restricted")]
    NotRestricted(String, u32),

    #[error("subspace is not stable under the group action")]
    NotStable,

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("not a transversal: {0}")]
    InvalidTransversal(String),

    #[error("regular module exceeds configured limit: degree {d} > {limit}")]
    RegularLimit { d: usize, limit: usize },

    #[error("characteristic {0} is not covered: these checks assume p > 3")]
    SmallCharacteristic(u32),

    #[error("splitting-field diagnostic: {0}")]
    SplittingField(String),

    #[error("randomized search exhausted: {0}")]
    SearchExhausted(String),

    #[error("isomorphism test inconclusive: {0}")]
    Inconclusive(String),

    #[error("search budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("identification failed: {0}")]
    Identification(String),

    #[error("malformed serialized data: {0}")]
    Decode(String),

    #[error("malformed module expression: {0}")]
    Expression(String),
}
