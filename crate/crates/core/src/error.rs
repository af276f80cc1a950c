use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("level n = {0} is below 3")]
    LevelTooSmall(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("non-canonical module: {0}")]
    NonCanonical(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{term} is outside the domain: {why}")]
    Domain { term: String, why: String },
    #[error("{0} is not in the image of the translation")]
    NotInImage(String),
    #[error("no tower address: {0}")]
    NoAddress(String),
    #[error("invalid family configuration: {0}")]
    Config(String),
    #[error("prime {0} is not in the configured prime set")]
    PrimeNotInFamily(u32),
    #[error("oracle failure: {0}")]
    Oracle(String),
    #[error("linear system: {0}")]
    Linear(String),
    #[error("normal form: {0}")]
    NormalForm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
