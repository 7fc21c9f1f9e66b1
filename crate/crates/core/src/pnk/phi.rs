//! Counting k-subsets that induce a complete or empty subgraph.
//!
//! The direct count scans all `C(n,k)` subsets.  The sieve expresses the
//! same number as an alternating sum over small edge subsets of the graph:
//! for each set `A` of fewer than `C(k,2)` edges spanning `s <= k`
//! vertices, the term `(-1)^|A| * C(n-s, k-s)` counts the k-subsets whose
//! induced edge set contains `A`, and the alternation cancels everything
//! except the homogeneous subsets.  The cancellation argument needs an odd
//! slot count `C(k,2)`, so the sieve only accepts `k = 2, 3 (mod 4)`.

use itertools::Itertools;

use crate::combinatorics::{binomial, Graph, IncidenceMatrix};
use crate::error::{Error, Result};

/// Edge-subset enumeration ceiling for the sieve.
const MAX_SIEVE_SUBSETS: u128 = 10_000_000;

fn check_k(g: &Graph, k: u32) -> Result<()> {
    if !(2..=g.n()).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "homogeneous subset count needs 2 <= k <= n, got n={}, k={k}",
            g.n()
        )));
    }
    Ok(())
}

/// Number of k-subsets of the vertices whose induced subgraph is complete
/// or empty, by scanning every subset.
pub fn count_homogeneous_subsets(g: &Graph, k: u32) -> Result<u64> {
    check_k(g, k)?;
    let n = g.n();
    let b = (k * (k - 1) / 2) as usize;
    let inc = IncidenceMatrix::new(n, k)?;
    let mut count = 0u64;
    for rank in 0..inc.num_columns() {
        let present = inc.col_mask(rank).and_count(g.edge_bits());
        if present == 0 || present == b {
            count += 1;
        }
    }
    Ok(count)
}

/// The same count as [`count_homogeneous_subsets`], but via the
/// alternating sieve over edge subsets of size below `C(k,2)`.  Only valid
/// for `k = 2, 3 (mod 4)`; rejects instances whose edge-subset enumeration
/// would exceed an internal ceiling.
pub fn count_homogeneous_subsets_by_sieve(g: &Graph, k: u32) -> Result<i64> {
    check_k(g, k)?;
    let b = k * (k - 1) / 2;
    if b % 2 == 0 {
        return Err(Error::WrongResidueClass { k });
    }
    let n = g.n();
    let edge_vertex_masks: Vec<u32> = g
        .edge_list()
        .iter()
        .map(|&(i, j)| (1u32 << i) | (1u32 << j))
        .collect();
    let mut planned = 0u128;
    for a in 0..b as u64 {
        planned += binomial(edge_vertex_masks.len() as u64, a);
        if planned > MAX_SIEVE_SUBSETS {
            return Err(Error::NotInDomain(format!(
                "sieve over {} edges up to size {} needs more than {} subsets",
                edge_vertex_masks.len(),
                b - 1,
                MAX_SIEVE_SUBSETS
            )));
        }
    }
    let mut total = 0i64;
    for a in 0..b as usize {
        let sign = if a % 2 == 1 { -1i64 } else { 1i64 };
        for combo in edge_vertex_masks.iter().combinations(a) {
            let span_mask = combo.into_iter().fold(0u32, |acc, &m| acc | m);
            let s = span_mask.count_ones();
            if s <= k {
                total += sign * binomial((n - s) as u64, (k - s) as u64) as i64;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn complete_and_empty_graphs_count_every_subset() {
        let k5 = Graph::complete(5);
        assert_eq!(count_homogeneous_subsets(&k5, 3).unwrap(), 10);
        assert_eq!(count_homogeneous_subsets_by_sieve(&k5, 3).unwrap(), 10);
        let e6 = Graph::empty(6);
        assert_eq!(count_homogeneous_subsets(&e6, 3).unwrap(), 20);
        assert_eq!(count_homogeneous_subsets_by_sieve(&e6, 3).unwrap(), 20);
    }

    #[test]
    fn the_five_cycle_has_no_homogeneous_triple() {
        let c5 = Graph::cycle(5);
        assert_eq!(count_homogeneous_subsets(&c5, 3).unwrap(), 0);
        assert_eq!(count_homogeneous_subsets_by_sieve(&c5, 3).unwrap(), 0);
    }

    #[test]
    fn sieve_matches_direct_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in [5u32, 6, 7] {
            for _ in 0..30 {
                let g = Graph::random(n, &mut rng);
                let direct = count_homogeneous_subsets(&g, 3).unwrap();
                let sieve = count_homogeneous_subsets_by_sieve(&g, 3).unwrap();
                assert_eq!(sieve, direct as i64, "mismatch on n={n} {g:?}");
            }
        }
    }

    #[test]
    fn sieve_handles_a_deeper_alternation() {
        // k = 6 has 15 slots, odd, so the sieve applies with subsets up to
        // size 14; on six vertices the count asks whether the whole graph
        // is homogeneous.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let g = Graph::random(6, &mut rng);
            let direct = count_homogeneous_subsets(&g, 6).unwrap();
            let sieve = count_homogeneous_subsets_by_sieve(&g, 6).unwrap();
            assert_eq!(sieve, direct as i64);
        }
    }

    #[test]
    fn even_slot_counts_are_rejected() {
        let g = Graph::cycle(6);
        match count_homogeneous_subsets_by_sieve(&g, 4) {
            Err(Error::WrongResidueClass { k: 4 }) => {}
            other => panic!("expected residue rejection, got {other:?}"),
        }
        assert!(matches!(
            count_homogeneous_subsets_by_sieve(&g, 5),
            Err(Error::WrongResidueClass { k: 5 })
        ));
    }

    #[test]
    fn oversized_sieves_are_refused() {
        // k = 7 means subsets up to size 20 out of up to 28 edges; a dense
        // 8-vertex graph blows past the enumeration ceiling.
        let g = Graph::complete(8);
        assert!(matches!(
            count_homogeneous_subsets_by_sieve(&g, 7),
            Err(Error::NotInDomain(_))
        ));
    }
}
