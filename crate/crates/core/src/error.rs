use thiserror::Error;

/// Error surface of the whole engine.
///
/// The three variants map onto the CLI exit-code contract:
/// `Usage` -> 2, `Precondition` -> 3, `Internal` -> 4.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: wrong dimensions, empty lists, ragged data.
    #[error("usage error: {0}")]
    Usage(String),

    /// Input is well-formed but violates an operation's precondition
    /// (for example a non-canonical singularity fed to a plt-weight search).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An invariant the engine maintains internally failed to hold.
    /// These are bugs or corrupted embedded data, never user mistakes.
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
