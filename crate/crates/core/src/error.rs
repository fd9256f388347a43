use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("precision must be positive")]
    ZeroPrecision,
    #[error("k must be at least 1")]
    ZeroDegree,
    #[error("number of terms must be at least 1")]
    ZeroTerms,
    #[error("x = {x} is not a {p}-adic integer; convergence cannot be certified")]
    OutsideDomain { x: alloc::string::String, p: u64 },
    #[error("x = {0} must be an integer")]
    NonIntegerX(alloc::string::String),
    #[error("coefficient list has length {len}, expected k = {k}")]
    CoefficientCount { k: usize, len: usize },
    #[error("Bernoulli table covers B_0..B_{have}, need B_{need}")]
    TableTooShort { need: usize, have: usize },
    #[error("{terms} terms exceed the work limit of {limit}")]
    WorkLimit { terms: u128, limit: u64 },
    #[error("triple k = {k} violates invariant: {what}")]
    Invariant { k: usize, what: &'static str },
}
