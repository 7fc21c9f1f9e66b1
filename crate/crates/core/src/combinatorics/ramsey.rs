//! The k-Ramsey property, the exhaustive labeled census, and the
//! divisibility hypothesis used by the restricted sum identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial, edge_index, ColexSubsets, Graph};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exec::{plan_shard_bits, WorkerPool};

/// Precomputed per-subset edge masks for repeated Ramsey tests at one
/// `(n, k)`.  Requires `C(n,2) <= 64`, which every enumerable size meets.
pub struct RamseyTester {
    k: u32,
    full: u32,
    masks: Vec<u64>,
}

impl RamseyTester {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if !(2..=n).contains(&k) || n > super::MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "Ramsey test needs 2 <= k <= n <= 32, got n={n}, k={k}"
            )));
        }
        if Graph::num_edge_slots(n) > 64 {
            return Err(Error::InvalidParameter(format!(
                "packed Ramsey tester requires C(n,2) <= 64, got n={n}"
            )));
        }
        let masks = subset_edge_masks(n, k);
        Ok(RamseyTester {
            k,
            full: binomial(k as u64, 2) as u32,
            masks,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// True when the packed graph has neither a k-clique nor a
    /// k-independent set.
    #[inline]
    pub fn is_ramsey_code(&self, code: u64) -> bool {
        for &m in &self.masks {
            let hit = (code & m).count_ones();
            if hit == 0 || hit == self.full {
                return false;
            }
        }
        true
    }
}

/// Edge mask of every k-subset, in colex rank order.
pub(crate) fn subset_edge_masks(n: u32, k: u32) -> Vec<u64> {
    ColexSubsets::new(n, k)
        .map(|s| {
            let mut mask = 0u64;
            for b in 1..s.len() {
                for a in 0..b {
                    mask |= 1u64 << edge_index(s[a], s[b], n);
                }
            }
            mask
        })
        .collect()
}

/// True when `g` has neither a k-clique nor a k-independent set.  Works
/// for any `n <= 32`; `k > n` is rejected as a programming error.
pub fn is_k_ramsey(g: &Graph, k: u32) -> bool {
    assert!((2..=g.n()).contains(&k), "k must satisfy 2 <= k <= n");
    let full = binomial(k as u64, 2) as usize;
    let bits = g.edge_bits();
    if bits.len() <= 64 {
        let code = bits.as_word();
        let masks = subset_edge_masks(g.n(), k);
        return masks.iter().all(|&m| {
            let hit = (code & m).count_ones() as usize;
            hit != 0 && hit != full
        });
    }
    for s in ColexSubsets::new(g.n(), k) {
        let mut hit = 0usize;
        for b in 1..s.len() {
            for a in 0..b {
                if g.has_edge(s[a], s[b]) {
                    hit += 1;
                }
            }
        }
        if hit == 0 || hit == full {
            return false;
        }
    }
    true
}

/// Counts all labeled graphs on `n` vertices with neither a k-clique nor a
/// k-independent set, by exhausting the `2^C(n,2)` graph codes.
///
/// The count is positive exactly when `n` is below the k-th diagonal
/// Ramsey number.
pub fn count_ramsey_graphs(n: u32, k: u32, budget: Budget, pool: &WorkerPool) -> Result<u64> {
    let tester = RamseyTester::new(n, k)?;
    let total_bits = Graph::log2_graph_count(n);
    budget.admit_log2("count_ramsey_graphs", total_bits)?;

    let shard_bits = plan_shard_bits(total_bits);
    let shards = 1usize << shard_bits;
    let span = 1u64 << (total_bits - shard_bits);
    let partials = pool.run_indexed(shards, |s| {
        let lo = s as u64 * span;
        let mut count = 0u64;
        for code in lo..lo + span {
            if tester.is_ramsey_code(code) {
                count += 1;
            }
        }
        count
    });
    Ok(partials.iter().sum())
}

/// Outcome of the integrality test for `(n-2)! / (k! (n-k)!)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub n: u32,
    pub k: u32,
    pub divisible: bool,
    /// The integer quotient when `divisible` is true.
    pub quotient: Option<BigInt>,
}

/// Tests whether `(n-2)! / (k! (n-k)!)` is an integer; this is the
/// hypothesis under which the restricted sum identities apply.
pub fn divisibility_check(n: u32, k: u32) -> Result<DivisibilityReport> {
    if !(2..=n).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "divisibility check needs 2 <= k <= n, got n={n}, k={k}"
        )));
    }
    let numerator = factorial(n as u64 - 2);
    let denominator = factorial(k as u64) * factorial(n as u64 - k as u64);
    debug_assert!(num_traits::Signed::is_positive(&denominator));
    let (q, r) = num_integer::Integer::div_rem(&numerator, &denominator);
    let divisible = r.is_zero();
    Ok(DivisibilityReport {
        n,
        k,
        divisible,
        quotient: divisible.then_some(q),
    })
}

fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= BigInt::from(t);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: u32, k: u32) -> u64 {
        count_ramsey_graphs(n, k, Budget::count_default(), &WorkerPool::serial()).unwrap()
    }

    #[test]
    fn pentagon_is_triangle_ramsey() {
        assert!(Graph::cycle(5).is_ramsey(3));
        assert!(!Graph::empty(5).is_ramsey(3));
        assert!(!Graph::complete(5).is_ramsey(3));
        // Adding a chord to the pentagon creates a triangle.
        let mut chord = Graph::cycle(5);
        chord.set_edge(0, 2, true);
        assert!(!chord.is_ramsey(3));
    }

    #[test]
    fn ramsey_property_is_complement_invariant() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let g = Graph::random(7, &mut rng);
            assert_eq!(g.is_ramsey(3), g.complement().is_ramsey(3));
        }
    }

    #[test]
    fn census_matches_known_values() {
        // For k = 3 the census is: n=3 -> 6, n=4 -> 18, n=5 -> 12 (the
        // labeled pentagons), and none from n = 6 on.
        assert_eq!(count(3, 3), 6);
        assert_eq!(count(4, 3), 18);
        assert_eq!(count(5, 3), 12);
        assert_eq!(count(6, 3), 0);
    }

    #[test]
    fn two_vertex_census_is_empty() {
        // A graph on >= 2 vertices always has an edge or a non-edge.
        assert_eq!(count(2, 2), 0);
        assert_eq!(count(3, 2), 0);
    }

    #[test]
    fn census_respects_budget() {
        let tiny = Budget::new(1 << 4).unwrap();
        let err = count_ramsey_graphs(5, 3, tiny, &WorkerPool::serial()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn census_is_thread_count_invariant() {
        let budget = Budget::count_default();
        let serial = count_ramsey_graphs(6, 3, budget, &WorkerPool::serial()).unwrap();
        let parallel = count_ramsey_graphs(6, 3, budget, &WorkerPool::new(8)).unwrap();
        assert_eq!(serial, parallel);
        assert_eq!(
            count_ramsey_graphs(5, 3, budget, &WorkerPool::new(3)).unwrap(),
            12
        );
    }

    #[test]
    fn divisibility_examples() {
        // k = 5: holds at n = 43, 44, 48 but not 45.
        for (n, expected) in [(43u32, true), (44, true), (45, false), (48, true)] {
            let rep = divisibility_check(n, 5).unwrap();
            assert_eq!(rep.divisible, expected, "n={n}");
        }
        // Quotients: 41!/(5! 38!) = 41*40*39/120 = 533, and similarly
        // 574 at n = 44, 759 at n = 48.
        assert_eq!(
            divisibility_check(43, 5).unwrap().quotient.unwrap(),
            BigInt::from(533)
        );
        assert_eq!(
            divisibility_check(44, 5).unwrap().quotient.unwrap(),
            BigInt::from(574)
        );
        assert_eq!(
            divisibility_check(48, 5).unwrap().quotient.unwrap(),
            BigInt::from(759)
        );
        // k = 3: (n-2)!/(6 (n-3)!) = (n-2)/6, an integer iff n = 2 mod 6.
        assert!(!divisibility_check(6, 3).unwrap().divisible);
        let rep = divisibility_check(8, 3).unwrap();
        assert!(rep.divisible);
        assert_eq!(rep.quotient.unwrap(), BigInt::from(1));
        // k = 2: the ratio is (n-2)!/(2 (n-2)!) = 1/2, never an integer.
        assert!(!divisibility_check(2, 2).unwrap().divisible);
        assert!(!divisibility_check(5, 2).unwrap().divisible);
        assert!(divisibility_check(1, 3).is_err());
    }
}
