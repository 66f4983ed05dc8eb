use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("invalid registry: {}", .0.join("; "))]
    InvalidRegistry(Vec<String>),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("certification failure: {0}")]
    Certification(String),
    #[error("{0}")]
    Computation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
