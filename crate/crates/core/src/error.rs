use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: String },
    #[error("invalid characteristic: {0}")]
    InvalidCharacteristic(String),
    #[error("invalid real form: {0}")]
    InvalidRealForm(String),
    #[error("not absolutely simple: {0}")]
    NotAbsolutelySimple(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("catalog integrity failure: {0}")]
    Integrity(String),
    #[error("unknown symmetric pair: {0}")]
    UnknownPair(String),
}

pub type Result<T> = std::result::Result<T, Error>;
