use thiserror::Error;

/// Failures raised by graph construction, counting and the oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("graph is disconnected; no spanning tree exists")]
    Disconnected,

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::SizeGuard(_) => 3,
            Error::Disconnected | Error::Consistency(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
