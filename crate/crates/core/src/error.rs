use thiserror::Error;

use crate::foundations::FieldSpec;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("{0} is not invertible in the field")]
    NotInvertible(String),

    #[error("ground size mismatch: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("parameter mismatch: n = {left} vs n = {right}")]
    ParameterMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("malformed diagram: {0}")]
    Malformed(String),

    #[error("characteristic violation: {0}")]
    Characteristic(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
