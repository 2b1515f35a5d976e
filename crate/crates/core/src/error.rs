use thiserror::Error;

/// Errors produced by the library. Each variant maps onto a CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: ragged matrices, unknown variables, schema violations.
    #[error("malformed input: {0}")]
    Input(String),
    /// The grading has a nonzero invertible degree or a zero column.
    #[error("grading is not positive: {0}")]
    NotPositive(String),
    /// A polynomial or module element mixes several multidegrees.
    #[error("non-homogeneous element: {0}")]
    NonHomogeneous(String),
    /// A degree, box, or length cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// A well-formed request the mathematics does not support (zero module, empty family, ...).
    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Domain(_) => 2,
            Error::NotPositive(_) => 3,
            Error::NonHomogeneous(_) => 4,
            Error::ResourceLimit(_) => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
