use thiserror::Error;

/// Errors shared across the crate.
///
/// Exact arithmetic means most operations are total; errors signal either a
/// violated caller contract (`PreconditionFailed`, range/dimension checks) or
/// an internal identity that failed to cancel, which indicates a bug rather
/// than a data condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inverting a series produced a numerator entry that is not an integer;
    /// the counting polynomial is not integer-valued at 0..=d+1.
    #[error("numerator coefficient {index} is not an integer: {value}")]
    NonIntegerCoefficient { index: usize, value: String },

    /// Rational intermediates failed to cancel to integers. This cannot occur
    /// for valid inputs and is treated as an internal failure.
    #[error("internal non-integer cancellation in {context}")]
    InternalNonInteger { context: &'static str },

    /// An exact polynomial division left a remainder (bug signal).
    #[error("exact division left a remainder in {context}")]
    InternalRemainder { context: &'static str },

    /// Two computation routes for the same quantity disagreed.
    #[error("engines disagree on U_{n}: {detail}")]
    EngineDisagreement { n: u32, detail: String },

    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    /// A documented hypothesis does not hold for the given input. `witness`
    /// is the first offending index where one exists.
    #[error("precondition failed: {reason}")]
    PreconditionFailed {
        reason: String,
        witness: Option<usize>,
    },

    #[error("vertices do not span a full-dimensional polytope")]
    NotFullDimensional,

    #[error("ambient dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("operation requires dimension {expected}, polytope has {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("lattice point scan would visit more than {budget} candidates")]
    BudgetExceeded { budget: u64 },

    /// A computed delta-vector entry was negative (bug signal: the counts do
    /// not come from a lattice polytope or the interpolation is wrong).
    #[error("delta vector entry {index} is negative: {value}")]
    NegativeDelta { index: usize, value: String },

    #[error("integer overflow in lattice point scan")]
    Overflow,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn precondition(reason: impl Into<String>, witness: Option<usize>) -> Self {
        Error::PreconditionFailed {
            reason: reason.into(),
            witness,
        }
    }
}
