use thiserror::Error;

/// Errors reported by the library.
///
/// Domain errors (`NotPrime`, `OutOfRange`, `Unsupported`) signal bad input and
/// map to CLI exit code 2. `NotAModuleCharacter` signals a virtual character
/// that is not a nonnegative sum of simple characters; when it comes out of a
/// closed-form code path it means an internal invariant was violated, as
/// does `Internal`, and both map to CLI exit code 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{what} {value} out of range (maximum {max})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        max: u64,
    },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("not a module character: {0}")]
    NotAModuleCharacter(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Shorthand for results carrying [`Error`].
pub type Result<T, E = Error> = std::result::Result<T, E>;
