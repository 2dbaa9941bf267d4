use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("no primitive root of order {order} in this field")]
    NoPrimitiveRoot { order: u64 },
    #[error("field characteristic {ch} divides n = {n}")]
    CharacteristicDividesN { ch: u64, n: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient dimensions do not match: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("enumeration would visit {count} objects, over the cap {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("algebra has no coalgebra structure")]
    MissingCoalgebra,
    #[error("subspace is not a left ideal")]
    NotLeftIdeal,
    #[error("subspace is not the kernel of a module-coalgebra quotient")]
    NotCoidealKernel,
    #[error("invalid Cayley table: {0}")]
    BadCayleyTable(String),
    #[error("element is zero")]
    ZeroElement,
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("search space of {count} candidates exceeds budget {budget}")]
    SearchTooLarge { count: u128, budget: u128 },
    #[error("element is not a right group-like projection")]
    NotRightGroupLike,
    #[error("radical computation requires characteristic 0 or > {dim}, got {ch}")]
    CharTooSmall { ch: u64, dim: usize },
    #[error("equivalent projection conditions disagree; this signals a bug or a counterexample:\n{dump}")]
    EquivalenceViolation { dump: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
