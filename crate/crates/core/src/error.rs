//! Errors raised when constructing or transforming model elements.

use alloc::string::String;

use crate::poset::OrderError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("{what} needs n >= {min}, got {n}")]
    TooSmall { what: &'static str, n: usize, min: usize },
    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("cannot parse {kind} from {input:?}: {reason}")]
    Parse { kind: &'static str, input: String, reason: String },
    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },
    #[error(transparent)]
    Order(#[from] OrderError),
}

impl ModelError {
    pub(crate) fn parse(kind: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Self::Parse { kind, input: input.into(), reason: reason.into() }
    }

    pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Self {
        Self::Invalid { kind, reason: reason.into() }
    }

    pub(crate) fn too_small(what: &'static str, n: usize, min: usize) -> Result<(), Self> {
        if n < min {
            Err(Self::TooSmall { what, n, min })
        } else {
            Ok(())
        }
    }
}
