use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid beta sequence: {0}")]
    InvalidBeta(String),

    #[error("{partition} is not a {e}-core")]
    NotACore { partition: String, e: u32 },

    #[error("{0} is not a block")]
    NotABlock(String),

    #[error("invalid y-vector: {0}")]
    InvalidY(String),

    #[error("modulus mismatch: expected e={expected}, found e={found}")]
    ModulusMismatch { expected: u32, found: u32 },

    #[error("arity mismatch: {expected} charges but {found} components")]
    Arity { expected: usize, found: usize },

    #[error("e={e} not supported here: {reason}")]
    UnsupportedModulus { e: u32, reason: &'static str },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

/// Coarse classification used for process exit codes and FFI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Usage,
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::InvalidArgument(_) => ErrorKind::Usage,
            Error::Resource(_) => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }
}
