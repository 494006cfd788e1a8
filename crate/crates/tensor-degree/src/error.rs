use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// The supplied multiplication table does not define a group.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// A catalog expression that the parser does not recognize.
    #[error("unknown group expression `{0}`")]
    UnknownGroup(String),

    /// An operation that requires a normal subgroup was given one that is not.
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    /// Coset enumeration would exceed the live-coset cap.
    #[error("coset enumeration exceeded the limit of {0} live cosets")]
    CosetLimitExceeded(usize),

    /// A presentation has more generators than the configured cap.
    #[error("presentation has {found} generators, more than the cap of {cap}")]
    TooManyGenerators { found: usize, cap: usize },

    /// The compatibility conditions for the pair of actions do not hold.
    #[error("the conjugation actions of H and K are not compatible")]
    IncompatibleActions,

    /// An element index outside the subgroup or group it must belong to.
    #[error("element index {index} out of range for {what}")]
    ElementOutOfRange { index: usize, what: &'static str },

    /// A theorem-backed internal invariant failed; this always signals an
    /// implementation bug, never bad input.
    #[error("internal check failed: {0}")]
    InternalCheckFailed(&'static str),

    /// Malformed text input (group files, presentation files).
    #[error("parse error at line {line}: {reason}")]
    ParseError { line: usize, reason: String },

    /// An I/O failure, with the path that caused it.
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
