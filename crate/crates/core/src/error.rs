use thiserror::Error;

use crate::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element id {id} out of range for a group of order {order}")]
    OutOfRange { id: Elem, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} cap exceeded: {needed} > {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("group is not a p-group")]
    NotPGroup,

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid extension data: {0}")]
    InvalidExtension(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("word arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("word has no structured form; closed-form evaluation needs short(i,k) or long(i)")]
    Unstructured,

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("construction check failed: {0}")]
    Construction(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, needed: impl Into<u128>, cap: impl Into<u128>) -> Self {
        Error::CapExceeded {
            what,
            needed: needed.into(),
            cap: cap.into(),
        }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
