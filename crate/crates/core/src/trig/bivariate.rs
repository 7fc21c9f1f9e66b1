//! Joint census of family size and incidence number.
//!
//! The bivariate polynomial collects one monomial `z^|H| w^i(G,H)` per
//! `(graph, family)` pair. Specializing it recovers the graph-pair cosine
//! sums without re-walking the pair space, and its coefficient histogram is
//! useful on its own for inspecting how incidence numbers distribute.

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::combinatorics::{binomial, Graph};
use crate::error::Result;
use crate::exact::BivariatePolynomial;
use crate::exec::{plan_shard_bits, WorkerPool};

use super::{column_edge_slots, gray, validate_nk};

/// Per-shard histogram: `hist[|H|][i]` counts pairs with that family size
/// and incidence number, for family indices `lo..lo+span`.
fn census_shard(
    cols: &[Vec<u32>],
    edges: usize,
    max_inc: usize,
    lo: u64,
    span: u64,
) -> Vec<Vec<u64>> {
    let nb = cols.len();
    let mut hist = vec![vec![0u64; max_inc + 1]; nb + 1];
    let mut mult = vec![0u32; edges];
    let mask = gray(lo);
    for (s, slots) in cols.iter().enumerate() {
        if (mask >> s) & 1 == 1 {
            for &e in slots {
                mult[e as usize] += 1;
            }
        }
    }
    let mut hsize = mask.count_ones() as usize;
    let mut j = 0u64;
    loop {
        let row = &mut hist[hsize];
        let mut inc: usize = 0;
        row[0] += 1;
        let mut gcode = 0u64;
        for jg in 1..(1u64 << edges) {
            let t = jg.trailing_zeros() as usize;
            gcode ^= 1 << t;
            if (gcode >> t) & 1 == 1 {
                inc += mult[t] as usize;
            } else {
                inc -= mult[t] as usize;
            }
            row[inc] += 1;
        }
        j += 1;
        if j == span {
            return hist;
        }
        let i = lo + j;
        let t = i.trailing_zeros() as usize;
        let inserted = (gray(i) >> t) & 1 == 1;
        for &e in &cols[t] {
            let e = e as usize;
            if inserted {
                mult[e] += 1;
            } else {
                mult[e] -= 1;
            }
        }
        if inserted {
            hsize += 1;
        } else {
            hsize -= 1;
        }
    }
}

/// The polynomial `sum_(G,H) z^|H| w^i(G,H)` over all graphs `G` and
/// k-subset families `H` on `n` vertices.
pub fn compute_bivariate(
    n: u32,
    k: u32,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<BivariatePolynomial> {
    validate_nk(n, k)?;
    let nb_big = binomial(u64::from(n), u64::from(k));
    let edges = Graph::num_edge_slots(n);
    budget.admit_log2(
        "pair census polynomial",
        (nb_big + edges as u128).min(u128::from(u32::MAX)) as u32,
    )?;
    let nb = nb_big as u32;
    let cols = column_edge_slots(n, k);
    let b = k as usize * (k as usize - 1) / 2;
    let max_inc = nb as usize * b;
    let shard_bits = plan_shard_bits(nb + edges as u32).min(nb);
    let span_bits = nb - shard_bits;
    let shards = 1usize << shard_bits;
    let hists = pool.run_indexed(shards, |s| {
        census_shard(&cols, edges, max_inc, (s as u64) << span_bits, 1u64 << span_bits)
    });
    let mut poly = BivariatePolynomial::zero();
    let mut merged = vec![vec![0u64; max_inc + 1]; nb as usize + 1];
    for hist in hists {
        for (m, h) in merged.iter_mut().zip(hist) {
            for (a, c) in m.iter_mut().zip(h) {
                *a += c;
            }
        }
    }
    for (eh, row) in merged.iter().enumerate() {
        for (i, &count) in row.iter().enumerate() {
            if count != 0 {
                poly.add_to_coeff(eh as u64, i as u64, &BigInt::from(count));
            }
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn three_vertices_match_the_hand_expansion() {
        // One column (the single triple); families are {} and {triple}.
        // Sum over 8 graphs: 8 + z*(1 + 3w + 3w^2 + w^3).
        let pool = WorkerPool::new(1);
        let poly = compute_bivariate(3, 3, Budget::count_default(), &pool).unwrap();
        assert_eq!(poly.coeff(0, 0), BigInt::from(8));
        assert_eq!(poly.coeff(1, 0), BigInt::from(1));
        assert_eq!(poly.coeff(1, 1), BigInt::from(3));
        assert_eq!(poly.coeff(1, 2), BigInt::from(3));
        assert_eq!(poly.coeff(1, 3), BigInt::from(1));
        assert_eq!(poly.num_terms(), 5);
    }

    #[test]
    fn four_vertices_have_the_right_mass_and_degree() {
        let pool = WorkerPool::new(2);
        let poly = compute_bivariate(4, 3, Budget::count_default(), &pool).unwrap();
        // Total mass is the number of pairs, 2^4 * 2^6.
        assert_eq!(
            poly.eval_int(&BigInt::from(1), &BigInt::from(1)),
            BigInt::from(1024)
        );
        // z-degree 4 (full family) plus w-degree 12 (complete graph).
        assert_eq!(poly.total_degree(), Some(16));
        // At z = 0 only the empty family survives, one term per graph.
        let at_zero = poly.eval_z(&BigInt::from(0));
        assert_eq!(at_zero.coeff(0), BigInt::from(64));
        assert_eq!(at_zero.num_terms(), 1);
    }

    #[test]
    fn family_size_rows_have_binomial_mass() {
        let pool = WorkerPool::new(1);
        let poly = compute_bivariate(4, 3, Budget::count_default(), &pool).unwrap();
        for eh in 0u64..=4 {
            let mass: BigInt = poly
                .iter()
                .filter(|((dz, _), _)| *dz == eh)
                .map(|(_, c)| c.clone())
                .sum();
            let expected = BigInt::from(binomial(4, eh as u64) as u64) * BigInt::from(64);
            assert_eq!(mass, expected, "row {eh}");
        }
    }

    #[test]
    fn thread_count_does_not_change_the_polynomial() {
        let a = compute_bivariate(4, 3, Budget::count_default(), &WorkerPool::new(1)).unwrap();
        let b = compute_bivariate(4, 3, Budget::count_default(), &WorkerPool::new(4)).unwrap();
        let av: Vec<_> = a.iter().map(|(d, c)| (d, c.clone())).collect();
        let bv: Vec<_> = b.iter().map(|(d, c)| (d, c.clone())).collect();
        assert_eq!(av, bv);
    }

    #[test]
    fn budget_gate_rejects_six_vertices_at_trig_allowance() {
        let pool = WorkerPool::new(1);
        match compute_bivariate(6, 3, Budget::trig_default(), &pool).unwrap_err() {
            Error::BudgetExceeded { predicted_log2, .. } => assert_eq!(predicted_log2, 35),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
