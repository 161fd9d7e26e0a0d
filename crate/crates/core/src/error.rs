use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generalized ring: {0}")]
    InvalidRing(String),
    #[error("elements belong to different generalized rings")]
    RingMismatch,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("operation requires a skew product on the grading ring")]
    NonSkew,
    #[error("the central morphism Z is not injective")]
    NonInjectiveZ,
    #[error("{what}: size {size} exceeds the cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
