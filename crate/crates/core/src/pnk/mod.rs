//! The signed polynomial of column-strict edge assignments.
//!
//! A *column-strict assignment* picks, for every k-subset of the vertices,
//! a nonempty proper subset of that subset's `C(k,2)` edge slots.  Each
//! assignment contributes a monomial `(-1)^(total slots picked) *
//! t^(edges touched)`, and their sum is a polynomial in `t` of degree at
//! most `C(n,2)`.  Its structure encodes the diagonal Ramsey property:
//!
//! * At `t = 1/2`, the value times `(-1)^C(n,k)` equals the probability
//!   that a uniform random graph on `n` labeled vertices has no complete
//!   and no empty k-subset (requires odd `C(k,2)`, see
//!   [`ramsey_probability_from_assignment`]).  In particular the
//!   polynomial vanishes identically once `n` reaches the k-th diagonal
//!   Ramsey number.
//! * Every coefficient of degree below [`vanishing_degree_bound`] is zero:
//!   an assignment touching few edges would force a k-subset too sparse to
//!   stay within them.
//!
//! The fast builder never walks the assignments themselves.  Grouping by
//! the set `W` of touched edges, the inner signed count factors over
//! columns into `0`, `-1`, or `-2` per column according to how `W` meets
//! it, and a subset Mobius transform peels the "touched exactly `W`"
//! numbers out of the "touched within `W`" products in `O(C(n,2) *
//! 2^C(n,2))` integer operations.  The naive builder walks assignments
//! directly and is the independent reference at toy sizes.

mod assignment;
mod phi;

pub use assignment::{
    involution_check, sample_strict_assignments, InvolutionReport, StrictAssignment,
    MAX_SAMPLE_ATTEMPTS,
};
pub use phi::{count_homogeneous_subsets, count_homogeneous_subsets_by_sieve};

use num_bigint::BigInt;
use num_traits::One;

use crate::budget::Budget;
use crate::combinatorics::{binomial, binomial_is_odd, subset_edge_masks};
use crate::error::{Error, Result};
use crate::exact::{IntPolynomial, Rational};
use crate::exec::WorkerPool;
use crate::trig::validate_nk;

/// Hard ceiling on `C(n,2)` for the transform table, which holds `2^C(n,2)`
/// entries of 16 bytes in memory.
const MAX_TRANSFORM_EDGES: usize = 28;

/// Table runs processed as one unit by the worker pool.
const RUN_BITS: usize = 12;

/// Builds the signed assignment polynomial by the subset-transform route.
///
/// Work and memory are `O(2^C(n,2))`; the budget must admit that many
/// terms and `C(n,2)` may not exceed 28.
pub fn edge_assignment_polynomial(
    n: u32,
    k: u32,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<IntPolynomial> {
    validate_nk(n, k)?;
    let edges = (n as usize) * (n as usize - 1) / 2;
    if edges > MAX_TRANSFORM_EDGES {
        return Err(Error::NotInDomain(format!(
            "transform table for C({n},2) = {edges} edges exceeds the \
             in-memory cap of 2^{MAX_TRANSFORM_EDGES} entries"
        )));
    }
    budget.admit_log2("edge-assignment transform", edges as u32)?;
    let col_masks = subset_edge_masks(n, k);
    let slots_odd = (k * (k - 1) / 2) % 2 == 1;
    let col_parity_sign: i128 = if binomial_is_odd(n as u64, k as u64) {
        -1
    } else {
        1
    };

    // Phase 1: for every edge set W, the signed count of column-strict
    // assignments whose footprint lies inside W.  The count factors over
    // columns: a column disjoint from W has no valid choice, a partially
    // covered column contributes -1, and a fully covered column sums to
    // -1 - (-1)^C(k,2) over its own subsets.
    let mut table = vec![0i128; 1usize << edges];
    let run = 1usize << RUN_BITS.min(edges);
    pool.run_chunks(&mut table, run, |run_index, piece| {
        let base = (run_index * run) as u64;
        for (off, slot) in piece.iter_mut().enumerate() {
            let w = base + off as u64;
            let mut full_cols = 0u32;
            let mut alive = true;
            for &cm in &col_masks {
                let x = w & cm;
                if x == 0 || (x == cm && slots_odd) {
                    alive = false;
                    break;
                }
                if x == cm {
                    full_cols += 1;
                }
            }
            if alive {
                *slot = col_parity_sign << full_cols;
            }
        }
    });

    // Phase 2: in-place subset Mobius transform, turning "inside W" into
    // "exactly W".  Partial sums stay below 2^(C(n,2) + C(n,k)), well
    // inside i128 for every admissible size.
    for bit in 0..edges {
        pool.run_chunks(&mut table, 1usize << (bit + 1), |_, piece| {
            let half = piece.len() / 2;
            let (lo, hi) = piece.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h -= *l;
            }
        });
    }

    // Phase 3: bucket by footprint size.
    let runs = table.len() / run;
    let partials = pool.run_indexed(runs, |r| {
        let mut local = vec![0i128; edges + 1];
        for (off, &v) in table[r * run..(r + 1) * run].iter().enumerate() {
            if v != 0 {
                local[((r * run + off) as u64).count_ones() as usize] += v;
            }
        }
        local
    });
    let mut by_degree = vec![0i128; edges + 1];
    for local in partials {
        for (acc, v) in by_degree.iter_mut().zip(local) {
            *acc += v;
        }
    }
    Ok(IntPolynomial::from_coeffs(
        by_degree
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(d, c)| (d as u64, BigInt::from(c))),
    ))
}

/// Builds the same polynomial by walking every column-strict assignment.
/// Only instances with at most ten million assignments are accepted; this
/// is the cross-validation reference, not a production path.
pub fn edge_assignment_polynomial_naive(n: u32, k: u32) -> Result<IntPolynomial> {
    const MAX_ASSIGNMENTS: u128 = 10_000_000;
    validate_nk(n, k)?;
    let b = k * (k - 1) / 2;
    if b >= 32 {
        return Err(Error::NotInDomain(format!(
            "column masks need {b} bits, more than the supported 31"
        )));
    }
    let strict = (1u128 << b) - 2;
    if strict == 0 {
        // k = 2: no column has a valid choice, so the sum is empty.
        return Ok(IntPolynomial::zero());
    }
    let num_cols = binomial(n as u64, k as u64) as usize;
    let total = strict.checked_pow(num_cols as u32);
    match total {
        Some(t) if t <= MAX_ASSIGNMENTS => {}
        _ => {
            return Err(Error::NotInDomain(format!(
                "naive walk over {strict}^{num_cols} assignments exceeds \
                 {MAX_ASSIGNMENTS}"
            )))
        }
    }
    let edges = (n as usize) * (n as usize - 1) / 2;
    let col_masks = subset_edge_masks(n, k);
    // expand[s][local mask] = footprint of that choice as global edge bits.
    let expand: Vec<Vec<u64>> = col_masks
        .iter()
        .map(|&cm| {
            let slots: Vec<u64> = (0..64).filter(|j| cm >> j & 1 == 1).collect();
            (0..1u32 << b)
                .map(|local| {
                    slots
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| local >> j & 1 == 1)
                        .map(|(_, &e)| 1u64 << e)
                        .sum()
                })
                .collect()
        })
        .collect();

    let full = (1u32 << b) - 1;
    let mut by_degree = vec![0i64; edges + 1];
    let mut choice = vec![1u32; num_cols];
    loop {
        let mut footprint = 0u64;
        let mut picked = 0u32;
        for (s, &c) in choice.iter().enumerate() {
            footprint |= expand[s][c as usize];
            picked += c.count_ones();
        }
        let sign = if picked % 2 == 1 { -1 } else { 1 };
        by_degree[footprint.count_ones() as usize] += sign;

        let mut s = 0;
        loop {
            if s == num_cols {
                return Ok(IntPolynomial::from_coeffs(
                    by_degree
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| **c != 0)
                        .map(|(d, &c)| (d as u64, BigInt::from(c))),
                ));
            }
            choice[s] += 1;
            if choice[s] == full {
                choice[s] = 1;
                s += 1;
            } else {
                break;
            }
        }
    }
}

/// Probability that a uniform random graph on `n` labeled vertices has no
/// complete and no empty k-subset, read off the assignment polynomial at
/// `t = 1/2`.  The identity behind it needs an odd `C(k,2)`, so `k` must
/// be `2` or `3 (mod 4)`.
pub fn ramsey_probability_from_assignment(
    n: u32,
    k: u32,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<Rational> {
    if (k * (k - 1) / 2) % 2 == 0 {
        return Err(Error::WrongResidueClass { k });
    }
    let poly = edge_assignment_polynomial(n, k, budget, pool)?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let value = poly.eval_rational(&half);
    if binomial_is_odd(n as u64, k as u64) {
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// Smallest degree at which the assignment polynomial can have a nonzero
/// coefficient: every assignment touching `m` edges with `2(k-1)m <
/// n(n-k+1)` cancels, because some k-subset meets too few touched edges.
pub fn vanishing_degree_bound(n: u32, k: u32) -> u64 {
    debug_assert!(k >= 2 && k <= n);
    let num = n as u64 * (n as u64 - k as u64 + 1);
    let den = 2 * (k as u64 - 1);
    num.div_ceil(den)
}
