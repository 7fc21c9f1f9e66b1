//! Doubly strict edge assignments and the complement involution.
//!
//! An *edge assignment* picks, for every k-subset column, a subset of that
//! column's `C(k,2)` edge slots.  The polynomial builders in the parent
//! module sum over *column-strict* assignments (every chosen subset is
//! nonempty and proper).  This file handles the smaller *doubly strict*
//! domain, where additionally every edge slot is chosen by at least one but
//! not all of the `C(n-2,k-2)` columns containing it.  Complementing every
//! column preserves that domain and flips the parity of the total number of
//! chosen slots exactly when the slot count `C(n,k) * C(k,2)` is odd, which
//! is what makes the signed sum over the domain collapse.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::trig::{column_edge_slots, validate_nk};

/// Upper bound on rejection-sampling attempts before giving up.
pub const MAX_SAMPLE_ATTEMPTS: u64 = 1_000_000;

/// A doubly strict edge assignment: one nonempty proper slot subset per
/// k-subset column, with every edge used at least once and never by all of
/// its columns.  Columns are in colexicographic order; each entry is a
/// bitmask over that column's `C(k,2)` local slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictAssignment {
    n: u32,
    k: u32,
    choices: Vec<u32>,
}

impl StrictAssignment {
    /// Validates both strictness conditions and wraps the choice vector.
    pub fn new(n: u32, k: u32, choices: Vec<u32>) -> Result<Self> {
        validate_nk(n, k)?;
        let b = (k * (k - 1) / 2) as u32;
        if b >= 32 {
            return Err(Error::NotInDomain(format!(
                "column masks need {b} bits, more than the supported 31"
            )));
        }
        let num_cols = binomial(n as u64, k as u64);
        if choices.len() as u128 != num_cols {
            return Err(Error::NotInDomain(format!(
                "expected {num_cols} column choices, got {}",
                choices.len()
            )));
        }
        let full = (1u32 << b) - 1;
        for (s, &mask) in choices.iter().enumerate() {
            if mask == 0 || mask >= full {
                return Err(Error::NotInDomain(format!(
                    "column {s} choice {mask:#b} is not a nonempty proper subset"
                )));
            }
        }
        let usages = row_usage_counts(n, k, &choices);
        let per_edge = binomial(n as u64 - 2, k as u64 - 2) as u32;
        for (e, &u) in usages.iter().enumerate() {
            if !(1..per_edge).contains(&u) {
                return Err(Error::NotInDomain(format!(
                    "edge slot {e} is used {u} of {per_edge} possible times, \
                     outside the strict range"
                )));
            }
        }
        Ok(StrictAssignment { n, k, choices })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Per-column local slot masks in colexicographic column order.
    pub fn columns(&self) -> &[u32] {
        &self.choices
    }

    /// Total number of selected slots across all columns.
    pub fn selected_count(&self) -> u64 {
        self.choices.iter().map(|m| u64::from(m.count_ones())).sum()
    }

    /// `-1` when the number of selected slots is odd, `+1` otherwise.
    pub fn sign(&self) -> i8 {
        if self.selected_count() % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// How many columns select each of the `C(n,2)` edge slots.
    pub fn row_usages(&self) -> Vec<u32> {
        row_usage_counts(self.n, self.k, &self.choices)
    }

    /// Replaces every column's choice by its complement within the column.
    /// The result is again doubly strict: column complements of nonempty
    /// proper subsets are nonempty proper, and an edge used `u` of `r`
    /// times becomes used `r - u` times, which stays inside `1..=r-1`.
    pub fn complement(&self) -> StrictAssignment {
        let b = self.k * (self.k - 1) / 2;
        let full = (1u32 << b) - 1;
        StrictAssignment {
            n: self.n,
            k: self.k,
            choices: self.choices.iter().map(|m| full ^ m).collect(),
        }
    }

    /// Total slot count `C(n,k) * C(k,2)` of the column/slot grid; its
    /// parity decides whether complementation flips the sign.
    pub fn total_slots(n: u32, k: u32) -> u64 {
        let b = k as u64 * (k as u64 - 1) / 2;
        binomial(n as u64, k as u64) as u64 * b
    }
}

fn row_usage_counts(n: u32, k: u32, choices: &[u32]) -> Vec<u32> {
    let cols = column_edge_slots(n, k);
    let num_edges = (n as usize) * (n as usize - 1) / 2;
    let mut usages = vec![0u32; num_edges];
    for (slots, &mask) in cols.iter().zip(choices) {
        let mut m = mask;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            usages[slots[j] as usize] += 1;
            m &= m - 1;
        }
    }
    usages
}

/// Draws `count` doubly strict assignments by rejection from the uniform
/// distribution on column-strict ones, using a fixed-seed ChaCha stream so
/// results are reproducible.  Fails with [`Error::SamplerExhausted`] after
/// [`MAX_SAMPLE_ATTEMPTS`] candidate draws; for `(3,3)` and `k = 2` that is
/// the only possible outcome, because the doubly strict domain is empty.
pub fn sample_strict_assignments(
    n: u32,
    k: u32,
    count: usize,
    seed: u64,
) -> Result<Vec<StrictAssignment>> {
    validate_nk(n, k)?;
    let b = k * (k - 1) / 2;
    if b >= 32 {
        return Err(Error::NotInDomain(format!(
            "column masks need {b} bits, more than the supported 31"
        )));
    }
    let full = (1u32 << b) - 1;
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    if full < 2 {
        // k = 2: a single slot has no nonempty proper subset at all.
        return Err(Error::SamplerExhausted {
            attempts: 0,
            collected: 0,
            requested: count,
        });
    }
    let num_cols = binomial(n as u64, k as u64) as usize;
    let per_edge = binomial(n as u64 - 2, k as u64 - 2) as u32;
    let cols = column_edge_slots(n, k);
    let num_edges = (n as usize) * (n as usize - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut usages = vec![0u32; num_edges];
    let mut attempts = 0u64;
    let mut choices = vec![0u32; num_cols];
    while attempts < MAX_SAMPLE_ATTEMPTS {
        attempts += 1;
        // gen_range(1..full) is uniform over the nonempty proper masks.
        for c in choices.iter_mut() {
            *c = rng.gen_range(1..full);
        }
        usages.fill(0);
        for (slots, &mask) in cols.iter().zip(&choices) {
            let mut m = mask;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                usages[slots[j] as usize] += 1;
                m &= m - 1;
            }
        }
        if usages.iter().all(|&u| u >= 1 && u < per_edge) {
            out.push(StrictAssignment {
                n,
                k,
                choices: choices.clone(),
            });
            if out.len() == count {
                return Ok(out);
            }
        }
    }
    Err(Error::SamplerExhausted {
        attempts,
        collected: out.len(),
        requested: count,
    })
}

/// What sampling says about the complement involution on the doubly strict
/// domain at `(n, k)`.
#[derive(Debug, Clone)]
pub struct InvolutionReport {
    pub n: u32,
    pub k: u32,
    /// Number of domain elements examined.
    pub samples: usize,
    /// `C(n,k) * C(k,2)`; odd means complementation must flip every sign.
    pub total_slots: u64,
    /// Every complement revalidated as doubly strict from scratch.
    pub closed_under_complement: bool,
    /// Complementing twice returned the original on every sample.
    pub involutive: bool,
    pub all_signs_reversed: bool,
    pub all_signs_preserved: bool,
}

/// Samples the doubly strict domain and checks that complementation is an
/// involution on it, recording whether it reversed or preserved the sign of
/// every sample.
pub fn involution_check(n: u32, k: u32, samples: usize, seed: u64) -> Result<InvolutionReport> {
    let drawn = sample_strict_assignments(n, k, samples, seed)?;
    let mut closed = true;
    let mut involutive = true;
    let mut all_reversed = true;
    let mut all_preserved = true;
    for m in &drawn {
        let c = m.complement();
        closed &= StrictAssignment::new(n, k, c.columns().to_vec()).is_ok();
        involutive &= c.complement() == *m;
        if c.sign() == -m.sign() {
            all_preserved = false;
        } else {
            all_reversed = false;
        }
    }
    Ok(InvolutionReport {
        n,
        k,
        samples: drawn.len(),
        total_slots: StrictAssignment::total_slots(n, k),
        closed_under_complement: closed,
        involutive,
        all_signs_reversed: all_reversed,
        all_signs_preserved: all_preserved,
    })
}
