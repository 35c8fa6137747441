use thiserror::Error;

/// Errors raised by the numerical routines and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("coverage error: height {requested} exceeds table coverage {available}")]
    Coverage { requested: f64, available: f64 },

    #[error("incomplete zero search in Gram block [{start}, {end}]: found {found} sign changes, expected {expected}")]
    Incomplete {
        start: f64,
        end: f64,
        found: usize,
        expected: usize,
    },

    #[error("histogram geometry mismatch: {0}")]
    Geometry(String),

    #[error("insufficient samples: need {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
