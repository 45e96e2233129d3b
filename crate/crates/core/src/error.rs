use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length cap required: generator `{0}` has degree 0 or belongs to an unbounded degree-1 family")]
    CapMissing(String),
    #[error("generator `{0}` has no value under the derivation")]
    UndefinedGenerator(String),
    #[error("differential does not square to zero on generator `{0}`")]
    NotSquareZero(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("caps too small: {0}")]
    CapExhausted(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error at {field}: {message}")]
    Schema { field: String, message: String },
    #[error("identity falsified: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
