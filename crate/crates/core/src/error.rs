use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("orbit of size {size} exceeds the enumeration cap {cap}; use the closed formula instead")]
    OrbitTooLarge { size: u128, cap: u128 },

    #[error("representation of dimension {dim} exceeds the multiplicity cap {cap}")]
    RepresentationTooLarge { dim: String, cap: u64 },

    #[error("invalid group spec: {0}")]
    InvalidGroupSpec(String),

    #[error("subgroup generator {0} does not lie in the fundamental group")]
    BadSubgroupGenerator(String),

    #[error("{m} does not divide {n}")]
    NotDivisor { m: u64, n: u64 },

    #[error("N(G) did not stabilize up to bound {bound}; the result is inconclusive")]
    Inconclusive { bound: u32 },

    #[error("{0} is not a prime or zero")]
    NotPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis not satisfied: {0}")]
    NotApplicable(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
