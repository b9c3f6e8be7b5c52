use thiserror::Error;

/// Every failure the library can report. Constructions refuse with one of
/// these rather than degrade silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("row {hi} is beyond the top row {qstar} of class {class}")]
    OutOfClass { class: usize, hi: usize, qstar: usize },
    #[error("paths share vertex {0}")]
    NotDisjoint(usize),
    #[error("bridge has length {actual}, expected {expected}")]
    BridgeMismatch { expected: usize, actual: usize },
    #[error("range error: {0}")]
    Range(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("size mismatch: multiset has {size} edges but v-1 = {expected}")]
    SizeMismatch { size: usize, expected: usize },
    #[error("{value} has no inverse modulo {modulus}")]
    NoInverse { value: usize, modulus: usize },
    #[error("excluded case: {0}")]
    ExcludedCase(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("construction unavailable: {0}")]
    Unavailable(String),
    #[error("post-verification failed for {rule}: {detail}")]
    PostVerify { rule: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pre<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
