//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by evaluation, transformation and classification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `0/0` encountered while forming a point on the Riemann sphere.
    #[error("indeterminate form 0/0")]
    IndeterminateForm,

    /// A convergent degenerated to `0/0` at the given 1-based index.
    #[error("degenerate continued fraction at index {index}: approximant is 0/0")]
    Degenerate { index: u64 },

    /// Operands of a float operation carry different working precisions.
    #[error("precision mismatch: {left} bits vs {right} bits")]
    PrecisionMismatch { left: u32, right: u32 },

    /// A partial numerator vanished; the fraction terminates there.
    #[error("zero partial numerator at index {index}")]
    ZeroPartialNumerator { index: u64 },

    /// A partial denominator vanished where a transform requires it nonzero.
    #[error("zero partial denominator at index {index}")]
    ZeroPartialDenominator { index: u64 },

    /// An equivalence factor r_n was zero.
    #[error("zero equivalence factor at index {index}")]
    ZeroEquivalenceFactor { index: u64 },

    /// Request past the end of a finite coefficient source.
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: u64, len: u64 },

    /// Two consecutive prescribed approximants coincide; the Bernoulli
    /// construction is undefined there.
    #[error("consecutive equal approximant values at index {index}")]
    ConsecutiveEqualValues { index: u64 },

    /// A convergent subsequence passed through the point at infinity where a
    /// contraction needs finite values.
    #[error("infinite approximant at index {index}")]
    InfiniteApproximant { index: u64 },

    /// Polynomial text did not conform to the grammar.
    #[error("polynomial syntax error at byte {pos}: {msg}")]
    PolynomialSyntax { pos: usize, msg: String },

    /// Name not present in the built-in registry.
    #[error("unknown family {name:?}")]
    UnknownFamily { name: String },

    /// A family definition violated a structural invariant.
    #[error("invalid family: {msg}")]
    InvalidFamily { msg: String },

    /// A source is not of the required `K a_n/1` form.
    #[error("fraction is not in unit-denominator form at index {index}")]
    NotUnitDenominator { index: u64 },

    /// The evaluation point q lies outside the operation's domain.
    #[error("q outside domain: {msg}")]
    QOutsideDomain { msg: String },

    /// The family fails the degree-law validation required by the operation.
    #[error("degree profile violation: {msg}")]
    ProfileViolation { msg: String },

    /// Odd/even limits did not both converge, so the monitor cannot run.
    #[error("odd/even subsequence limits did not converge")]
    LimitsNotConverged,

    /// Odd/even limits coincide; the monitored theorem does not apply.
    #[error("odd and even limits are not distinct")]
    LimitsNotDistinct,

    /// Malformed input outside the numeric domain (literals, parameters).
    #[error("invalid input: {msg}")]
    InvalidInput { msg: String },
}

impl Error {
    /// Attach a 1-based coefficient index to an indeterminate form.
    pub fn at_index(self, index: u64) -> Self {
        match self {
            Error::IndeterminateForm => Error::Degenerate { index },
            other => other,
        }
    }
}
