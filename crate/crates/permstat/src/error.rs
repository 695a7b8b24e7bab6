use thiserror::Error;

/// Errors produced by validating constructors and resource-guarded
/// entry points.
///
/// Positions mentioned in error messages are 1-based, matching the
/// serialized forms of every object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor rejected its input. `object` names the type,
    /// `reason` pinpoints the violated invariant.
    #[error("invalid {object}: {reason}")]
    Invalid { object: &'static str, reason: String },

    /// A size guard refused to enumerate or tabulate an object family.
    #[error(
        "size {requested} exceeds the resource guard ({limit}); \
         set PERMSTAT_MAX_N to raise it"
    )]
    ResourceLimit { requested: usize, limit: usize },
}

impl Error {
    pub(crate) fn invalid(object: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            object,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Failure to parse the text encoding of an object.
///
/// `position` is the 1-based index of the offending token (for
/// whitespace-separated encodings) or character (for step strings).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at token {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}
