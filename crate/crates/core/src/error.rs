use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Everything except [`Error::Internal`] is a
/// problem with the caller's input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("validation error: {0}")]
    Validation(String),

    /// The matrix has an eigenvalue that is an m-th root of unity.
    #[error("wall W_{m}: det(A^{m} - I) = 0")]
    Wall { m: u64 },

    #[error("unknown knot `{0}`")]
    Lookup(String),

    #[error("incompatible fibers: genus {left} vs genus {right}")]
    IncompatibleFibers { left: u32, right: u32 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag used on the CLI error stream.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension",
            Error::Domain(_) => "domain",
            Error::Validation(_) => "validation",
            Error::Wall { .. } => "wall",
            Error::Lookup(_) => "lookup",
            Error::IncompatibleFibers { .. } => "incompatible-fibers",
            Error::Hypothesis(_) => "hypothesis",
            Error::Invariant(_) => "invariant",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}
