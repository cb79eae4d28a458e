use thiserror::Error;

use crate::topology::TopologyClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{class} topology needs at least {min} nodes, got {n}")]
    InvalidSize {
        class: TopologyClass,
        n: usize,
        min: usize,
    },

    #[error("cannot place {edges} edges on {n} nodes as a connected simple graph")]
    Infeasible { n: usize, edges: usize },

    #[error("invalid {metric} range: {reason}")]
    Range {
        metric: &'static str,
        reason: String,
    },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("flows need at least 2 nodes, topology has {n}")]
    Endpoint { n: usize },

    #[error("invalid node pair ({u}, {v}): {reason}")]
    InvalidPair {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error(
        "exact path enumeration on {n} nodes exceeds the guard of {guard}; pass a max-length cap or force"
    )]
    Guard { n: usize, guard: usize },

    #[error("path statistics need at least 2 nodes, matrix has {n}")]
    EmptyMatrix { n: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error in `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("unsupported schema_version {0:?}")]
    Version(String),

    #[error("emulator export supports at most {max} nodes, scenario has {n}")]
    EmulatorSize { n: usize, max: usize },
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }
}
