//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the documented domain of the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The predicted amount of work exceeds the configured budget.
    /// `predicted_log2` is the base-2 logarithm (rounded up) of the
    /// predicted term count, which may be far beyond `u64` range.
    #[error(
        "budget exceeded: {operation} predicts about 2^{predicted_log2} terms, budget is {budget}"
    )]
    BudgetExceeded {
        operation: &'static str,
        predicted_log2: u32,
        budget: u64,
    },

    /// A cyclotomic order exceeds the supported bound.
    #[error("cyclotomic order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: u64, max: u64 },

    /// An operation requiring `(n-2)!/(k!(n-k)!)` to be an integer was
    /// invoked on a pair `(n, k)` where it is not.
    #[error("divisibility hypothesis fails: (n-2)!/(k!(n-k)!) is not an integer for n={n}, k={k}")]
    DivisibilityHypothesis { n: u32, k: u32 },

    /// The operation is only meaningful for `k = 2, 3 (mod 4)`.
    #[error("operation requires k = 2 or 3 (mod 4), got k={k}")]
    WrongResidueClass { k: u32 },

    /// A matrix passed to the pairing map lies outside its domain.
    #[error("assignment matrix is not in the restricted domain: {0}")]
    NotInDomain(String),

    /// Rejection sampling failed to produce enough domain elements.
    #[error("sampler exhausted {attempts} attempts, collected {collected} of {requested}")]
    SamplerExhausted {
        attempts: u64,
        collected: usize,
        requested: usize,
    },

    /// Two independently computed values that must agree do not.
    #[error("internal cross-check failed: {0}")]
    CrossCheckFailed(String),

    /// I/O failure while writing checkpoints or reports.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Convenience constructor for budget errors from an exact bit count.
    pub fn budget(operation: &'static str, predicted_log2: u32, budget: u64) -> Self {
        Error::BudgetExceeded {
            operation,
            predicted_log2,
            budget,
        }
    }
}
