use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series with zero constant term")]
    DivisionByZeroConstantTerm,
    #[error("series must have constant term 1")]
    ConstantTermNotOne,
    #[error("series must have constant term 0")]
    NonzeroConstantTerm,
    #[error("coefficient index {index} is outside a series of order {order}")]
    OrderExceeded { index: usize, order: usize },
    #[error("enumeration of N = {n} exceeds the budget N <= {max}")]
    BudgetExceeded { n: usize, max: usize },
    #[error("generating-function coefficient {value} is not a non-negative integer")]
    NonIntegerCoefficient { value: String },
    #[error("pole at sampled point j = {j}: the sampled denominator {denominator} + {j} vanishes")]
    PoleAtSampledPoint { j: usize, denominator: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("argument {m} is odd; only even arguments are supported")]
    OddArgument { m: i64 },
    #[error("routes disagree: {0}")]
    InternalMismatch(String),
    #[error("cannot parse rational {0:?}: expected a, -a, or a/b")]
    ParseRational(String),
}
