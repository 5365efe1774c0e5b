//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by parsing, quotient queries and complex construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A link-map document failed to parse; positions are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A polynomial in the canonical text grammar failed to parse.
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    /// A quotient query was asked below the exponents of its inputs.
    #[error("window {window} too small: inputs carry exponents up to {required}")]
    WindowTooSmall { window: i64, required: i64 },

    /// A chain complex was not of the supported one-relator shape.
    #[error("unsupported complex shape: {0}")]
    UnsupportedShape(String),

    /// A linear combination was given mismatched coefficient data.
    #[error("length mismatch: {coefficients} coefficients for {spheres} spheres")]
    LengthMismatch { coefficients: usize, spheres: usize },

    /// An intersection sum was requested over an unframed Whitney disk.
    #[error("disk {0} is not framed; tau needs framed Whitney disks")]
    UnframedDisk(String),
}

impl Error {
    /// Shorthand for a parse error at a line/column position.
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
