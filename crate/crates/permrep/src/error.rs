//! Crate-wide error type.

/// Errors reported by fallible operations in this crate.
///
/// Violations of documented preconditions on trusted in-process data
/// (mismatched degrees, invalid constructor arguments) panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A matrix does not belong to the family required by the operation.
    #[error("not a member of {family}: {reason}")]
    NotInFamily {
        /// Name of the family whose membership test failed.
        family: String,
        /// Which structural condition failed.
        reason: String,
    },

    /// An enumeration would exceed the configured size budget.
    #[error(
        "budget exceeded: the requested enumeration has {needed} elements, budget is {budget}"
    )]
    BudgetExceeded {
        /// Exact size of the requested enumeration.
        needed: u128,
        /// The configured cap.
        budget: u64,
    },

    /// The request is outside the supported parameter range.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An I/O failure while reading input files.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
