use thiserror::Error;

/// Errors surfaced by the library. Every variant is a usage error: the
/// caller violated a documented precondition.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),

    #[error("{a} is not a unit modulo {m}")]
    NotCoprime { a: i64, m: usize },

    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },

    #[error("invalid type {{{m},{n}}}: {reason}")]
    InvalidType { m: u64, n: u32, reason: &'static str },

    #[error("value {value} at index {index} is not reduced modulo {m}")]
    ValueOutOfRange { index: usize, value: u64, m: u64 },

    #[error("{0}")]
    Parity(&'static str),

    #[error("input is not a bent function")]
    NotBent,

    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),

    #[error("{0} must be odd")]
    EvenModulus(u64),

    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: u64 },

    #[error("search space has {required} candidates, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("no existence rule applies to {{{m},{n}}}")]
    NoConstruction { m: u64, n: u32 },

    #[error("malformed witness: {0}")]
    Witness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
