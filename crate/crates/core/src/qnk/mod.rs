//! The kernel polynomial of the even-selection parity system.
//!
//! Over GF(2), take one variable per (k-subset column, edge slot) pair and
//! impose two families of parity constraints: every edge slot is selected
//! an even number of times across the columns containing it, and every
//! column selects an even number of its own `C(k,2)` slots.  The solutions
//! form a linear kernel, and the *kernel polynomial* counts them by the
//! number of columns that select nothing at all:
//!
//! `Q(t) = sum over kernel vectors h of t^(number of empty columns of h)`.
//!
//! Structure that follows directly: `Q(1)` is the kernel size `2^d`, the
//! degree is `C(n,k)` with leading coefficient one (only the zero vector
//! leaves every column empty), and all coefficients are nonnegative.  Less
//! obviously, evaluating at `tau = 1 - 2^(C(k,2)-1)` ties the kernel to
//! the diagonal Ramsey property: for odd `C(k,2)`,
//!
//! `(-1)^C(n,k) * 2^((1-C(k,2)) * C(n,k)) * Q(tau)`
//!
//! is the probability that a uniform random graph on `n` labeled vertices
//! contains no complete and no empty k-subset, so `Q(tau) = 0` certifies
//! `n >= R(k)`.  The builder finds a kernel basis by Gaussian elimination
//! and walks all `2^d` kernel vectors in Gray order, toggling one basis
//! vector per step; a naive enumeration of the full variable cube serves
//! as the independent reference at toy sizes.

use num_bigint::BigInt;
use num_traits::One;

use crate::bits::Bitset;
use crate::budget::Budget;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exact::{IntPolynomial, Rational};
use crate::exec::{plan_shard_bits, WorkerPool};
use crate::trig::{column_edge_slots, gray, validate_nk};

/// Dense-representation ceiling on the number of GF(2) variables.
const MAX_VARS: usize = 4096;

/// The parity constraint system on (column, slot) selection variables.
///
/// Variable `s * C(k,2) + j` says whether column `s` selects its `j`-th
/// edge slot.  Rows list the `C(n,2)` edge constraints first, then the
/// `C(n,k)` column constraints.  The row sum over the whole system is
/// zero (each variable appears in exactly one row of each family), which
/// is the system's only dependency in every case exercised here.
pub struct ParitySystem {
    n: u32,
    k: u32,
    vars: usize,
    slots_per_col: usize,
    rows: Vec<Bitset>,
    rank: usize,
    basis: Vec<Bitset>,
}

impl ParitySystem {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        validate_nk(n, k)?;
        let b = (k as usize) * (k as usize - 1) / 2;
        let num_cols = binomial(n as u64, k as u64);
        let vars_big = num_cols * b as u128;
        if vars_big > MAX_VARS as u128 {
            return Err(Error::InvalidParameter(format!(
                "parity system with {vars_big} variables exceeds the dense \
                 cap of {MAX_VARS}"
            )));
        }
        let vars = vars_big as usize;
        let num_cols = num_cols as usize;
        let num_edges = (n as usize) * (n as usize - 1) / 2;
        let cols = column_edge_slots(n, k);
        let mut rows = vec![Bitset::new(vars); num_edges + num_cols];
        for (s, slots) in cols.iter().enumerate() {
            for (j, &e) in slots.iter().enumerate() {
                let v = s * b + j;
                rows[e as usize].set(v, true);
                rows[num_edges + s].set(v, true);
            }
        }
        let (rank, basis) = kernel_basis(&rows, vars);
        Ok(ParitySystem {
            n,
            k,
            vars,
            slots_per_col: b,
            rows,
            rank,
            basis,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &Bitset {
        &self.rows[i]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Kernel dimension `d`; the kernel has `2^d` elements.
    pub fn nullity(&self) -> usize {
        self.vars - self.rank
    }

    /// A kernel basis in a fixed order (sparsest first, ties by the free
    /// variable that generated the vector), so walks shard identically on
    /// every run.
    pub fn kernel_basis(&self) -> &[Bitset] {
        &self.basis
    }

    /// Number of k-subset columns.
    pub fn num_columns(&self) -> usize {
        self.vars / self.slots_per_col
    }
}

/// Gaussian elimination over GF(2); returns the rank and a kernel basis.
fn kernel_basis(rows: &[Bitset], vars: usize) -> (usize, Vec<Bitset>) {
    let mut m: Vec<Bitset> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..vars {
        let Some(hit) = (r..m.len()).find(|&i| m[i].get(c)) else {
            continue;
        };
        m.swap(r, hit);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_with(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis: Vec<Bitset> = Vec::with_capacity(vars - r);
    let mut is_pivot = vec![false; vars];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in (0..vars).filter(|&c| !is_pivot[c]) {
        let mut v = Bitset::new(vars);
        v.set(f, true);
        for (i, &p) in pivots.iter().enumerate() {
            if m[i].get(f) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    basis.sort_by_key(|v| (v.count_ones(), v.first_one().unwrap_or(usize::MAX)));
    (r, basis)
}

/// Per-basis-vector toggle lists: which columns change, and how.
fn column_deltas(basis: &[Bitset], slots_per_col: usize) -> Vec<Vec<(usize, u64)>> {
    basis
        .iter()
        .map(|v| {
            let mut deltas: Vec<(usize, u64)> = Vec::new();
            for idx in v.iter_ones() {
                let col = idx / slots_per_col;
                let bit = 1u64 << (idx % slots_per_col);
                match deltas.last_mut() {
                    Some((c, w)) if *c == col => *w |= bit,
                    _ => deltas.push((col, bit)),
                }
            }
            deltas
        })
        .collect()
}

/// Walks kernel indices `lo..lo+span` in Gray order and tallies the empty
/// column count of each kernel vector.
fn walk_kernel_shard(
    deltas: &[Vec<(usize, u64)>],
    num_cols: usize,
    lo: u64,
    span: u64,
) -> Vec<u64> {
    let mut slots = vec![0u64; num_cols];
    let mask = gray(lo);
    for (t, delta) in deltas.iter().enumerate() {
        if (mask >> t) & 1 == 1 {
            for &(c, w) in delta {
                slots[c] ^= w;
            }
        }
    }
    let mut empty = slots.iter().filter(|&&w| w == 0).count();
    let mut hist = vec![0u64; num_cols + 1];
    let mut j = 0u64;
    loop {
        hist[empty] += 1;
        j += 1;
        if j == span {
            return hist;
        }
        let t = (lo + j).trailing_zeros() as usize;
        // Toggling is an XOR either way, so the Gray direction is moot.
        for &(c, w) in &deltas[t] {
            let before = slots[c] == 0;
            slots[c] ^= w;
            empty = empty + usize::from(slots[c] == 0) - usize::from(before);
        }
    }
}

/// Builds the kernel polynomial by walking all `2^d` kernel vectors.
pub fn parity_polynomial(n: u32, k: u32, budget: Budget, pool: &WorkerPool) -> Result<IntPolynomial> {
    let sys = ParitySystem::new(n, k)?;
    let d = sys.nullity() as u32;
    budget.admit_log2("parity kernel walk", d)?;
    let num_cols = sys.num_columns();
    let deltas = column_deltas(&sys.basis, sys.slots_per_col);
    let shard_bits = plan_shard_bits(d).min(d);
    let shards = 1usize << shard_bits;
    let span = 1u64 << (d - shard_bits);
    let partials = pool.run_indexed(shards, |s| {
        walk_kernel_shard(&deltas, num_cols, s as u64 * span, span)
    });
    let mut hist = vec![0u64; num_cols + 1];
    for partial in partials {
        for (acc, v) in hist.iter_mut().zip(partial) {
            *acc += v;
        }
    }
    Ok(IntPolynomial::from_coeffs(
        hist.into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(deg, c)| (deg as u64, BigInt::from(c))),
    ))
}

/// Builds the same polynomial by testing every point of the variable cube
/// against the constraints directly.  Accepts at most 20 variables; this
/// is the cross-validation reference, not a production path.
pub fn parity_polynomial_naive(n: u32, k: u32) -> Result<IntPolynomial> {
    const MAX_NAIVE_VARS: usize = 20;
    validate_nk(n, k)?;
    let b = (k as usize) * (k as usize - 1) / 2;
    let cols = column_edge_slots(n, k);
    let num_cols = cols.len();
    let num_edges = (n as usize) * (n as usize - 1) / 2;
    let vars = num_cols * b;
    if vars > MAX_NAIVE_VARS {
        return Err(Error::NotInDomain(format!(
            "naive parity enumeration over 2^{vars} assignments is \
             limited to 2^{MAX_NAIVE_VARS}"
        )));
    }
    let mut edge_masks = vec![0u64; num_edges];
    let mut col_masks = vec![0u64; num_cols];
    for (s, slots) in cols.iter().enumerate() {
        for (j, &e) in slots.iter().enumerate() {
            let v = s * b + j;
            edge_masks[e as usize] |= 1 << v;
            col_masks[s] |= 1 << v;
        }
    }
    let mut hist = vec![0u64; num_cols + 1];
    for code in 0..1u64 << vars {
        let ok = edge_masks
            .iter()
            .chain(&col_masks)
            .all(|&m| (code & m).count_ones() % 2 == 0);
        if ok {
            let empty = col_masks.iter().filter(|&&m| code & m == 0).count();
            hist[empty] += 1;
        }
    }
    Ok(IntPolynomial::from_coeffs(
        hist.into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(deg, c)| (deg as u64, BigInt::from(c))),
    ))
}

/// Probability that a uniform random graph on `n` labeled vertices has no
/// complete and no empty k-subset, read off the kernel polynomial at
/// `tau = 1 - 2^(C(k,2)-1)`.  Needs an odd `C(k,2)`, that is `k = 2, 3
/// (mod 4)`.
pub fn ramsey_probability_via_parity(
    n: u32,
    k: u32,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<Rational> {
    let b = (k as usize) * (k as usize - 1) / 2;
    if b % 2 == 0 {
        return Err(Error::WrongResidueClass { k });
    }
    let poly = parity_polynomial(n, k, budget, pool)?;
    let tau = BigInt::one() - (BigInt::one() << (b - 1));
    let value = poly.eval_int(&tau);
    let num_cols = binomial(n as u64, k as u64) as usize;
    let scale = BigInt::one() << ((b - 1) * num_cols);
    let signed = if num_cols % 2 == 1 { -value } else { value };
    Ok(Rational::new(signed, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::count_ramsey_graphs;
    use crate::pnk::ramsey_probability_from_assignment;

    fn walk(n: u32, k: u32) -> IntPolynomial {
        parity_polynomial(n, k, Budget::walk_default(), &WorkerPool::serial()).unwrap()
    }

    #[test]
    fn ranks_and_nullities_are_as_expected() {
        for (n, d) in [(3u32, 0usize), (4, 3), (5, 11), (6, 26)] {
            let sys = ParitySystem::new(n, 3).unwrap();
            assert_eq!(sys.nullity(), d, "nullity at n={n}");
            // One dependency: the sum of all rows.
            assert_eq!(sys.rank(), sys.num_rows() - 1, "rank at n={n}");
            assert_eq!(sys.kernel_basis().len(), d);
        }
    }

    #[test]
    fn basis_vectors_satisfy_every_constraint() {
        let sys = ParitySystem::new(5, 3).unwrap();
        for v in sys.kernel_basis() {
            for i in 0..sys.num_rows() {
                assert_eq!(v.and_count(sys.row(i)) % 2, 0);
            }
        }
    }

    #[test]
    fn smallest_polynomials_match_hand_expansion() {
        assert_eq!(
            walk(3, 3),
            IntPolynomial::from_coeffs([(1u64, BigInt::from(1))])
        );
        assert_eq!(
            walk(4, 3),
            IntPolynomial::from_coeffs([
                (4u64, BigInt::from(1)),
                (1, BigInt::from(4)),
                (0, BigInt::from(3)),
            ])
        );
    }

    #[test]
    fn gray_walk_matches_the_naive_enumeration() {
        for n in [3u32, 4] {
            assert_eq!(walk(n, 3), parity_polynomial_naive(n, 3).unwrap());
        }
    }

    #[test]
    fn gray_walk_matches_a_direct_kernel_scan() {
        // Re-enumerate the (5,3) kernel without Gray increments: build
        // each of the 2^11 vectors from scratch and bin its empty count.
        let sys = ParitySystem::new(5, 3).unwrap();
        let d = sys.nullity();
        let b = 3usize;
        let num_cols = sys.num_columns();
        let mut hist = vec![0u64; num_cols + 1];
        for pick in 0u64..1 << d {
            let mut slots = vec![0u64; num_cols];
            for (t, v) in sys.kernel_basis().iter().enumerate() {
                if (pick >> t) & 1 == 1 {
                    for idx in v.iter_ones() {
                        slots[idx / b] ^= 1 << (idx % b);
                    }
                }
            }
            hist[slots.iter().filter(|&&w| w == 0).count()] += 1;
        }
        let direct = IntPolynomial::from_coeffs(
            hist.into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(deg, c)| (deg as u64, BigInt::from(c))),
        );
        assert_eq!(walk(5, 3), direct);
    }

    #[test]
    fn shape_invariants_hold_below_the_threshold() {
        for n in [3u32, 4, 5] {
            let sys = ParitySystem::new(n, 3).unwrap();
            let q = walk(n, 3);
            let num_cols = sys.num_columns() as u64;
            assert_eq!(q.degree(), Some(num_cols));
            assert_eq!(q.coeff(num_cols), BigInt::from(1));
            assert!(q.iter().all(|(_, c)| c > &BigInt::from(0)));
            let kernel_size = BigInt::from(1) << sys.nullity();
            assert_eq!(q.eval_int(&BigInt::one()), kernel_size);
        }
    }

    #[test]
    fn five_vertex_value_at_tau_is_frozen() {
        let q = walk(5, 3);
        assert_eq!(q.eval_int(&BigInt::from(-3)), BigInt::from(12288));
    }

    #[test]
    fn six_vertex_polynomial_certifies_the_threshold() {
        let q = walk(6, 3);
        assert_eq!(q.eval_int(&BigInt::from(-3)), BigInt::from(0));
        assert_eq!(q.eval_int(&BigInt::one()), BigInt::from(1) << 26);
        assert_eq!(q.degree(), Some(20));
        assert_eq!(q.coeff(20), BigInt::from(1));
        assert!(q.iter().all(|(_, c)| c > &BigInt::from(0)));
    }

    #[test]
    fn tau_evaluation_recovers_the_graph_census() {
        let pool = WorkerPool::serial();
        for n in [3u32, 4, 5] {
            let via_kernel =
                ramsey_probability_via_parity(n, 3, Budget::walk_default(), &pool).unwrap();
            let ramsey = count_ramsey_graphs(n, 3, Budget::count_default(), &pool).unwrap();
            let edges = (n * (n - 1) / 2) as usize;
            let census = Rational::new(BigInt::from(ramsey), BigInt::one() << edges);
            assert_eq!(via_kernel, census, "census mismatch at n={n}");
            let via_assignment =
                ramsey_probability_from_assignment(n, 3, Budget::count_default(), &pool).unwrap();
            assert_eq!(via_kernel, via_assignment);
        }
    }

    #[test]
    fn even_slot_counts_are_rejected() {
        assert!(matches!(
            ramsey_probability_via_parity(
                5,
                4,
                Budget::walk_default(),
                &WorkerPool::serial()
            ),
            Err(Error::WrongResidueClass { k: 4 })
        ));
    }

    #[test]
    fn seven_vertex_walk_exceeds_the_default_budget() {
        match parity_polynomial(7, 3, Budget::walk_default(), &WorkerPool::serial()) {
            Err(Error::BudgetExceeded {
                predicted_log2: 50, ..
            }) => {}
            other => panic!("expected a 2^50 budget rejection, got {other:?}"),
        }
    }

    #[test]
    fn thread_count_does_not_change_the_polynomial() {
        let serial = walk(5, 3);
        for threads in [2, 8] {
            let q = parity_polynomial(5, 3, Budget::walk_default(), &WorkerPool::new(threads))
                .unwrap();
            assert_eq!(q, serial);
        }
    }
}
