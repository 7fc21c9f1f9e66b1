//! Work budgets for exhaustive enumerations.
//!
//! Every operation whose cost is exponential in its parameters predicts its
//! term count before running and refuses to start when the prediction
//! exceeds the budget.  Budgets are plain term counts; predictions are
//! carried as base-2 logarithms so that absurd sizes (`2^496`) never
//! overflow.

use crate::error::{Error, Result};

/// Default budget for trigonometric formula evaluations (terms per call).
pub const DEFAULT_TRIG_BUDGET: u64 = 1 << 26;

/// Default budget for the brute-force graph census.
pub const DEFAULT_COUNT_BUDGET: u64 = 1 << 28;

/// Default budget for the kernel walk of the parity-constrained polynomial.
pub const DEFAULT_WALK_BUDGET: u64 = 1 << 28;

/// Budgets beyond this are rejected so signed 64-bit accumulators stay safe.
pub const MAX_BUDGET: u64 = 1 << 62;

/// A cap on the number of terms an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_terms: u64,
}

impl Budget {
    /// A budget of exactly `max_terms` terms.
    pub fn new(max_terms: u64) -> Result<Self> {
        if max_terms == 0 || max_terms > MAX_BUDGET {
            return Err(Error::InvalidParameter(format!(
                "budget must be between 1 and 2^62, got {max_terms}"
            )));
        }
        Ok(Budget { max_terms })
    }

    pub fn trig_default() -> Self {
        Budget {
            max_terms: DEFAULT_TRIG_BUDGET,
        }
    }

    pub fn count_default() -> Self {
        Budget {
            max_terms: DEFAULT_COUNT_BUDGET,
        }
    }

    pub fn walk_default() -> Self {
        Budget {
            max_terms: DEFAULT_WALK_BUDGET,
        }
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }

    /// Admits a prediction of exactly `2^log2_terms` terms, or errors.
    pub fn admit_log2(&self, operation: &'static str, log2_terms: u32) -> Result<()> {
        if log2_terms >= 63 || (1u64 << log2_terms) > self.max_terms {
            return Err(Error::budget(operation, log2_terms, self.max_terms));
        }
        Ok(())
    }

    /// Admits a prediction of `terms` terms, or errors.
    pub fn admit(&self, operation: &'static str, terms: u64) -> Result<()> {
        if terms > self.max_terms {
            let log2 = 64 - terms.leading_zeros();
            return Err(Error::budget(operation, log2, self.max_terms));
        }
        Ok(())
    }

    /// Admits a prediction given as a base-2 logarithm that may exceed the
    /// `u64` range entirely (for example `(2^15 - 2)^35` states).
    pub fn admit_log2_ceil(&self, operation: &'static str, log2_terms_ceil: u32) -> Result<()> {
        self.admit_log2(operation, log2_terms_ceil)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::trig_default()
    }
}
