use alloc::string::String;
use core::fmt;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(String),
    /// Malformed textual input. `position` is the zero-based token index.
    Parse {
        /// Token index where parsing failed.
        position: usize,
        /// What went wrong.
        message: String,
    },
    /// Rotation machinery requested for `n <= 2` arguments.
    UnsupportedArity(usize),
    /// A function is not constant on the orbit with the given representative.
    NotCompressible(String),
    /// A dense object would exceed the configured size cap.
    Resource(String),
}

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// Short machine-readable kind tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Parse { .. } => "parse",
            Error::UnsupportedArity(_) => "arity",
            Error::NotCompressible(_) => "not-compressible",
            Error::Resource(_) => "resource",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "{m}"),
            Error::Parse { position, message } => write!(f, "at token {position}: {message}"),
            Error::UnsupportedArity(n) => write!(
                f,
                "rotation symmetry needs more than two arguments, got n = {n}"
            ),
            Error::NotCompressible(repr) => {
                write!(f, "function is not constant on the orbit of {repr}")
            }
            Error::Resource(m) => write!(f, "{m}"),
        }
    }
}

impl core::error::Error for Error {}
