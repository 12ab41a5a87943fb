//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by constructors, checks and enumerations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands have incompatible lengths or column counts.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension {
        /// The length required by the operation.
        expected: usize,
        /// The length actually supplied.
        found: usize,
    },

    /// An argument violates a documented precondition (range, canonical form, ...).
    #[error("invalid input: {0}")]
    Validation(String),

    /// An enumeration or sum would exceed its documented work budget.
    #[error("refused: {0}")]
    Budget(String),

    /// Puncturing does not reduce both stabilizer ranks by exactly one.
    #[error("puncture does not create a logical qubit: {0}")]
    PunctureNoLogical(String),

    /// A diagonal-gate verdict would depend on a global phase the engine does not track.
    #[error("unverified phase: {0}")]
    UnverifiedPhase(String),

    /// The requested operation is not available for this input.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A self-check failed; indicates a bug or a transcription error in a table.
    #[error("internal consistency check failed: {0}")]
    Internal(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
