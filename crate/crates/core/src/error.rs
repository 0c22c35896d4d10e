use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("malformed rational {0:?}")]
    BadRational(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("tuple {0} is not pure (contains the empty partition)")]
    NotPure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("level too small: need M >= {required}, form is given at level {have}")]
    Level { required: usize, have: usize },
    #[error("degree bound exceeded: {0}")]
    DegreeBound(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Parse errors are the caller's syntax; everything else is semantic.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::LinAlg(LinAlgError::BadRational(_)))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
