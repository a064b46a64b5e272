use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("exponent does not fit in 32 bits")]
    ExponentOverflow,

    #[error("step limit of {0} reductions exceeded")]
    StepLimit(usize),

    /// No strictly positive weight realizes the comparisons. The payload is a
    /// nonnegative integer combination of the difference vectors that is
    /// componentwise nonpositive.
    #[error("comparisons are infeasible; Farkas certificate {0:?}")]
    Infeasible(Vec<BigInt>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Betti table is incomplete up to degree {0}")]
    IncompleteTable(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
