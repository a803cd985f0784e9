use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorizations have different bases")]
    BasisMismatch,
    #[error("product mismatch: expected {expected}, got {actual}")]
    ProductMismatch { expected: u64, actual: u64 },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("component has a single vertex")]
    TooSmall,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("expected d > e, got d = {0}, e = {1}")]
    BadOrder(u64, u64),
    #[error("bad arguments: {0}")]
    BadArguments(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is not monic original")]
    NotMonicOriginal,
    #[error("expected degree {expected}, got {actual}")]
    BadDegree { expected: usize, actual: usize },
    #[error("{d} is not a nontrivial divisor of {n} coprime to the characteristic")]
    BadDivisor { n: usize, d: usize },
    #[error("no swapped decomposition exists")]
    NoSwapExists,
    #[error("the two decompositions do not describe the same polynomial")]
    NotACollision,
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("characteristic {p} divides {n}")]
    WildCharacteristic { p: u64, n: u64 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
