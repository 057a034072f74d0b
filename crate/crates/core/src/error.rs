use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not lie in the algebra")]
    NotInAlgebra,
    #[error("subspace is not a two-sided ideal of the algebra")]
    NotAnIdeal,
    #[error("ideal is not nilpotent")]
    NotNilpotent,
    #[error("ideal is zero")]
    ZeroIdeal,
    #[error("algebra does not satisfy any D_q identity")]
    NotDq,
    #[error("trace-form radical needs characteristic 0 or p > n (got p = {p}, n = {n})")]
    UnsupportedCharacteristic { p: u64, n: usize },
    #[error("brute-force check needs {needed} tuple evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("k = {k} is not admissible for block size {n}")]
    InadmissibleId { n: usize, k: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("q = {q} is outside the admissible range for n = {n}")]
    InvalidQ { n: usize, q: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("commutative algebra matches no canonical block")]
    NotCanonical,
    #[error("algebra is not a block-type D_q algebra with maximum-dimension diagonal blocks")]
    NotBlockTypeMaxDim,
    #[error("basis is not closed under multiplication: product of basis elements {left} and {right} leaves the span")]
    ClosureViolation { left: usize, right: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::FieldMismatch => "field_mismatch",
            Error::Singular => "singular",
            Error::NotInAlgebra => "not_in_algebra",
            Error::NotAnIdeal => "not_an_ideal",
            Error::NotNilpotent => "not_nilpotent",
            Error::ZeroIdeal => "zero_ideal",
            Error::NotDq => "not_dq",
            Error::UnsupportedCharacteristic { .. } => "unsupported_characteristic",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::InadmissibleId { .. } => "inadmissible_id",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::InvalidQ { .. } => "invalid_q",
            Error::InvalidInput(_) => "invalid_input",
            Error::NotCanonical => "not_canonical",
            Error::NotBlockTypeMaxDim => "not_block_type_max_dim",
            Error::ClosureViolation { .. } => "closure_violation",
            Error::Overflow(_) => "overflow",
            Error::Parse(_) => "parse_error",
        }
    }
}
