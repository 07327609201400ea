use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generators must be positive integers")]
    NonPositiveGenerator,
    #[error("could not parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("arithmetic overflow in 64-bit range")]
    Overflow,
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(u64),
    #[error("semigroup has content {0} > 1, so its complement in N is infinite")]
    InfiniteComplement(u64),
    #[error("semigroup has content {0} > 1; this operation needs a primitive semigroup")]
    NotPrimitive(u64),
    #[error("{what} must be positive")]
    ZeroParameter { what: &'static str },
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("input too large: {0}")]
    InputTooLarge(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("semigroup does not have maximal embedding dimension (e = {embedding_dimension}, m = {multiplicity})")]
    NotMed {
        embedding_dimension: usize,
        multiplicity: u64,
    },
    #[error("multiplicity {0} is too small for an (m-1)-generator decomposition")]
    DegenerateMultiplicity(u64),
    #[error("2-quotient search for {0} exhausted its budget")]
    SearchExhausted(String),
    #[error("parameter too small: {0}")]
    ParameterTooSmall(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("i/o error: {0}")]
    Io(String),
}
