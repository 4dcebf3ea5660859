use thiserror::Error;

use crate::tract::Tract;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("tract mismatch: expected {expected}, found {found}")]
    TractMismatch { expected: Tract, found: Tract },

    #[error("ground set mismatch")]
    GroundMismatch,

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matroid axiom violated: {0}")]
    Axiom(String),

    #[error("{0} is not a basis")]
    NotABasis(String),

    #[error("tract {0} is infinite; exhaustive enumeration is impossible")]
    InfiniteTract(Tract),

    #[error("operation not supported for tract {tract}: {reason}")]
    UnsupportedTract { tract: Tract, reason: String },

    #[error("enumeration of {requested} candidates exceeds the limit of {limit}")]
    EnumerationLimit { requested: u128, limit: u128 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
