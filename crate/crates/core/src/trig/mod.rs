//! Exact and floating-point evaluators for the trigonometric sums whose
//! vanishing detects the diagonal Ramsey property.
//!
//! Two families are implemented.  The subset-product family sums, over all
//! families `U` of k-subsets, a signed product of cosines whose angles are
//! affine in the edge multiplicities of `U`.  The incidence family sums,
//! over all pairs of a graph `G` and a subset family `H`, a single signed
//! cosine whose angle is affine in `|E(G)|` and the incidence number
//! `i(G, H)`.  Both families vanish for every admissible parameter choice
//! exactly when `n` reaches the k-th diagonal Ramsey number, and the
//! instance `q = -1/2, m = 1` is single-handedly equivalent to it.
//!
//! In exact mode every angle is a rational multiple of pi, so each cosine
//! doubles to a sum of two roots of unity and the whole sum is evaluated
//! in `Z[zeta_N]` for one common order `N`; a reported zero is a
//! certificate.  Float mode runs the same enumeration with compensated
//! summation and a width-proportional zero tolerance, and certifies
//! nothing.

mod bivariate;
mod incidence;
mod mult;
mod sinprod;

use std::sync::Arc;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{OrderData, ScaledCyclotomic};

pub use bivariate::compute_bivariate;
pub use incidence::{eval_general_incidence, eval_general_incidence_float, eval_restricted_incidence};
pub use mult::{eval_general_mult, eval_general_mult_float, eval_restricted_mult};
pub use sinprod::sin_product_sum;

/// Relative zero tolerance for float mode: a sum counts as numerically
/// zero when `|sum| < FLOAT_ZERO_SCALE * terms`.
pub const FLOAT_ZERO_SCALE: f64 = 1e-9;

/// What a (non)vanishing sum says about `n` versus the Ramsey number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyImplication {
    /// The sum vanished: consistent with (and for the canonical parameter
    /// instances, equivalent to) `n >= R(k)`.
    AtLeast,
    /// The sum did not vanish: certifies `n < R(k)`.
    Below,
}

impl std::fmt::Display for RamseyImplication {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RamseyImplication::AtLeast => write!(f, "n >= R(k)"),
            RamseyImplication::Below => write!(f, "n < R(k)"),
        }
    }
}

/// The computed value of a formula evaluation.
#[derive(Debug, Clone)]
pub enum FormulaValue {
    /// Exact cyclotomic value; zero decisions are certificates.
    Exact(ScaledCyclotomic),
    /// Compensated floating-point value with the tolerance that was used
    /// for the zero decision.
    Float { value: f64, zero_tolerance: f64 },
}

/// One shard's contribution to an exact evaluation, for checkpointing.
#[derive(Debug, Clone)]
pub struct ShardPartial {
    pub index: usize,
    /// Enumeration index range `[lo, hi)` covered by this shard.
    pub lo: u64,
    pub hi: u64,
    pub partial: ScaledCyclotomic,
}

/// Outcome of one formula evaluation.
#[derive(Debug, Clone)]
pub struct FormulaResult {
    pub value: FormulaValue,
    pub is_zero: bool,
    pub implied: RamseyImplication,
    pub terms_evaluated: u64,
    pub elapsed: Duration,
    /// True when the zero decision is exact (certificate-grade).
    pub certified: bool,
    /// Exact-mode shard partials, in shard order.
    pub shards: Vec<ShardPartial>,
}

impl FormulaResult {
    pub(crate) fn from_exact(
        value: ScaledCyclotomic,
        terms: u64,
        elapsed: Duration,
        shards: Vec<ShardPartial>,
    ) -> Self {
        let is_zero = value.is_zero();
        FormulaResult {
            value: FormulaValue::Exact(value),
            is_zero,
            implied: if is_zero {
                RamseyImplication::AtLeast
            } else {
                RamseyImplication::Below
            },
            terms_evaluated: terms,
            elapsed,
            certified: true,
            shards,
        }
    }

    pub(crate) fn from_float(value: f64, terms: u64, elapsed: Duration) -> Self {
        let zero_tolerance = FLOAT_ZERO_SCALE * terms as f64;
        let is_zero = value.abs() < zero_tolerance;
        FormulaResult {
            value: FormulaValue::Float {
                value,
                zero_tolerance,
            },
            is_zero,
            implied: if is_zero {
                RamseyImplication::AtLeast
            } else {
                RamseyImplication::Below
            },
            terms_evaluated: terms,
            elapsed,
            certified: false,
            shards: Vec::new(),
        }
    }

    /// The exact value, when the evaluation ran in exact mode.
    pub fn exact_value(&self) -> Option<&ScaledCyclotomic> {
        match &self.value {
            FormulaValue::Exact(v) => Some(v),
            FormulaValue::Float { .. } => None,
        }
    }

    pub fn float_value(&self) -> Option<f64> {
        match &self.value {
            FormulaValue::Exact(_) => None,
            FormulaValue::Float { value, .. } => Some(*value),
        }
    }
}

/// A restricted-hypothesis evaluation: the general sum at the canonical
/// parameters, multiplied by an explicit global sign.
#[derive(Debug, Clone)]
pub struct RestrictedSumResult {
    pub formula: FormulaResult,
    /// The global sign `(-1)^(a * C(n,2))`.
    pub sign: i8,
    /// The integer `a = (n-2)! / (k! (n-k)!)` whose existence the
    /// hypothesis demands.
    pub quotient: BigInt,
}

pub(crate) fn validate_nk(n: u32, k: u32) -> Result<()> {
    if !(2..=n).contains(&k) || n > crate::combinatorics::MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "formula evaluation needs 2 <= k <= n <= 32, got n={n}, k={k}"
        )));
    }
    Ok(())
}

#[inline]
pub(crate) fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Neumaier-compensated accumulator for float mode.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Doubled-cosine table for one cyclotomic order: entry `c` holds the
/// canonical coefficients of `zeta^c + zeta^(-c)`, together with zero
/// flags and, when every entry is a plain integer, an `i64` view.
pub(crate) struct TwoCosTable {
    pub data: Arc<OrderData>,
    pub entries: Vec<Vec<BigInt>>,
    pub is_zero: Vec<bool>,
    pub as_ints: Option<Vec<i64>>,
}

impl TwoCosTable {
    pub fn build(data: Arc<OrderData>) -> Self {
        let n = data.order() as usize;
        let powers = data.power_table(n);
        let mut entries = Vec::with_capacity(n);
        for c in 0..n {
            let fwd = &powers[c];
            let bwd = &powers[(n - c) % n];
            let sum: Vec<BigInt> = fwd.iter().zip(bwd).map(|(a, b)| a + b).collect();
            entries.push(sum);
        }
        let is_zero: Vec<bool> = entries
            .iter()
            .map(|e| e.iter().all(|c| c.is_zero()))
            .collect();
        let as_ints = entries
            .iter()
            .map(|e| {
                if e[1..].iter().all(|c| c.is_zero()) {
                    i64::try_from(&e[0]).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<i64>>>();
        TwoCosTable {
            data,
            entries,
            is_zero,
            as_ints,
        }
    }
}

/// Edge slots of each k-subset column, listed in ascending slot order.
///
/// Columns appear in colex rank order, so `out[rank]` are the edge indices
/// covered by the subset with that rank.
pub(crate) fn column_edge_slots(n: u32, k: u32) -> Vec<Vec<u32>> {
    use crate::combinatorics::{edge_index, ColexSubsets};
    ColexSubsets::new(n, k)
        .map(|subset| {
            let mut slots = Vec::with_capacity(k as usize * (k as usize - 1) / 2);
            for b in 1..subset.len() {
                for a in 0..b {
                    slots.push(edge_index(subset[a], subset[b], n) as u32);
                }
            }
            slots
        })
        .collect()
}

/// Sign of the reindexed sum under the divisibility hypothesis: negative
/// exactly when both the quotient and the number of edge slots are odd.
pub(crate) fn restricted_sign(quotient: &BigInt, n: u32) -> i8 {
    use num_integer::Integer;
    let slots = u64::from(n) * u64::from(n - 1) / 2;
    if quotient.is_odd() && slots % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Wraps a general-sum result as a restricted-sum result, negating the value
/// and every shard partial when the reindexing sign is negative.
pub(crate) fn apply_restricted_sign(
    mut formula: FormulaResult,
    sign: i8,
    quotient: BigInt,
) -> RestrictedSumResult {
    if sign < 0 {
        if let FormulaValue::Exact(v) = &formula.value {
            formula.value = FormulaValue::Exact(v.neg());
        }
        for shard in formula.shards.iter_mut() {
            shard.partial = shard.partial.neg();
        }
    }
    RestrictedSumResult {
        formula,
        sign,
        quotient,
    }
}
