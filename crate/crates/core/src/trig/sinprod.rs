//! Sine-product sums over graphs.
//!
//! Each graph contributes the product, over all k-subset columns, of
//! `sin(pi * j / b)` where `j` counts the column's edges present in the
//! graph and `b` is the number of edge slots per column. A factor vanishes
//! exactly when the column is induced empty or complete, so a term survives
//! precisely when the graph has the Ramsey property, and every surviving
//! term is positive. The sum is therefore zero if and only if no graph on
//! `n` vertices avoids both a k-clique and a k-anticlique.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::budget::Budget;
use crate::combinatorics::{binomial, Graph};
use crate::error::Result;
use crate::exact::{order_data, CyclotomicInteger, ScaledCyclotomic};
use crate::exec::{plan_shard_bits, WorkerPool};

use super::{column_edge_slots, gray, validate_nk, FormulaResult, ShardPartial, TwoCosTable};

struct SinContext {
    cols: Vec<Vec<u32>>,
    /// Columns touching each edge slot, the transpose of `cols`.
    rows: Vec<Vec<u32>>,
    /// Residue of the doubled sine at each per-column edge count.
    res_of_count: Vec<u32>,
    zero_of_count: Vec<bool>,
    table: TwoCosTable,
}

/// Tables for the ring of order `4b`: `2 sin(pi j / b)` is the doubled
/// cosine at numerator `b - 2j` over denominator `2b`.
fn build_sin_context(n: u32, k: u32) -> Result<SinContext> {
    let b = u64::from(k) * u64::from(k - 1) / 2;
    let order = 4 * b;
    let table = TwoCosTable::build(order_data(order)?);
    let res_of_count: Vec<u32> = (0..=b)
        .map(|j| (b as i64 - 2 * j as i64).rem_euclid(order as i64) as u32)
        .collect();
    let zero_of_count = res_of_count
        .iter()
        .map(|&res| table.is_zero[res as usize])
        .collect();
    let cols = column_edge_slots(n, k);
    let edges = Graph::num_edge_slots(n);
    let mut rows = vec![Vec::new(); edges];
    for (s, slots) in cols.iter().enumerate() {
        for &e in slots {
            rows[e as usize].push(s as u32);
        }
    }
    Ok(SinContext {
        cols,
        rows,
        res_of_count,
        zero_of_count,
        table,
    })
}

/// Canonical coefficient vector of the doubled-sine partial sum over the
/// graph codes `lo..lo+span`, visited in reflected Gray order.
fn eval_sin_shard(ctx: &SinContext, lo: u64, span: u64) -> Vec<BigInt> {
    let data = &ctx.table.data;
    let phi = data.phi();
    let nb = ctx.cols.len();
    let mut jcount = vec![0u32; nb];
    let gcode = gray(lo);
    for (s, slots) in ctx.cols.iter().enumerate() {
        jcount[s] = slots.iter().filter(|&&e| (gcode >> e) & 1 == 1).count() as u32;
    }
    let mut zero_cols = jcount
        .iter()
        .filter(|&&j| ctx.zero_of_count[j as usize])
        .count();
    let mut unit = vec![BigInt::zero(); phi];
    unit[0] = BigInt::from(1);
    let mut acc = vec![BigInt::zero(); phi];
    let mut j = 0u64;
    loop {
        if zero_cols == 0 {
            let mut prod = unit.clone();
            for &jc in &jcount {
                let entry = &ctx.table.entries[ctx.res_of_count[jc as usize] as usize];
                prod = data.mul_reduce(&prod, entry);
            }
            for (a, p) in acc.iter_mut().zip(&prod) {
                *a += p;
            }
        }
        j += 1;
        if j == span {
            return acc;
        }
        let i = lo + j;
        let t = i.trailing_zeros() as usize;
        let inserted = (gray(i) >> t) & 1 == 1;
        for &s in &ctx.rows[t] {
            let s = s as usize;
            zero_cols -= ctx.zero_of_count[jcount[s] as usize] as usize;
            if inserted {
                jcount[s] += 1;
            } else {
                jcount[s] -= 1;
            }
            zero_cols += ctx.zero_of_count[jcount[s] as usize] as usize;
        }
    }
}

/// Exact value of the sine-product sum over all graphs on `n` vertices.
///
/// Every term is nonnegative and a term is nonzero exactly when its graph
/// has the Ramsey property, so the certified zero decision of this sum is a
/// third, independent route to the `n >= R(k)` threshold.
pub fn sin_product_sum(
    n: u32,
    k: u32,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<FormulaResult> {
    validate_nk(n, k)?;
    let start = Instant::now();
    let edges = Graph::num_edge_slots(n) as u32;
    budget.admit_log2("sine-product sum", edges)?;
    let nb = binomial(u64::from(n), u64::from(k)) as u32;
    let ctx = build_sin_context(n, k)?;
    let shard_bits = plan_shard_bits(edges);
    let span_bits = edges - shard_bits;
    let shards = 1usize << shard_bits;
    let raws = pool.run_indexed(shards, |s| {
        eval_sin_shard(&ctx, (s as u64) << span_bits, 1u64 << span_bits)
    });
    let data = ctx.table.data.clone();
    let phi = data.phi();
    let mut total = vec![BigInt::zero(); phi];
    let mut partials = Vec::with_capacity(shards);
    for (idx, raw) in raws.into_iter().enumerate() {
        for (t, c) in total.iter_mut().zip(&raw) {
            *t += c;
        }
        partials.push(ShardPartial {
            index: idx,
            lo: (idx as u64) << span_bits,
            hi: (idx as u64 + 1) << span_bits,
            partial: ScaledCyclotomic::new(CyclotomicInteger::from_parts(data.clone(), raw), nb),
        });
    }
    let value = ScaledCyclotomic::new(CyclotomicInteger::from_parts(data, total), nb);
    Ok(FormulaResult::from_exact(
        value,
        1u64 << edges,
        start.elapsed(),
        partials,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{is_k_ramsey, ColexSubsets};
    use crate::error::Error;
    use crate::exact::{sin_pi_rational, Rational};
    use crate::trig::RamseyImplication;
    use num_traits::One;

    /// Per-graph reference: a product of sine values per graph, optionally
    /// restricted to graphs with the Ramsey property.
    fn direct_sum(n: u32, k: u32, ramsey_only: bool) -> ScaledCyclotomic {
        let b = u64::from(k) * u64::from(k - 1) / 2;
        let edges = Graph::num_edge_slots(n) as u32;
        let order = 4 * b;
        let subsets: Vec<Vec<u32>> = ColexSubsets::new(n, k).collect();
        let one = ScaledCyclotomic::new(
            CyclotomicInteger::from_integer(order, BigInt::one()).unwrap(),
            0,
        );
        let mut sum = ScaledCyclotomic::zero(order).unwrap();
        for code in 0u64..(1 << edges) {
            let g = Graph::from_code(n, code);
            if ramsey_only && !is_k_ramsey(&g, k) {
                continue;
            }
            let mut term = one.clone();
            for subset in &subsets {
                let mut j = 0i64;
                for bi in 1..subset.len() {
                    for ai in 0..bi {
                        if g.has_edge(subset[ai], subset[bi]) {
                            j += 1;
                        }
                    }
                }
                term = term.mul(&sin_pi_rational(j, b).unwrap());
            }
            sum = sum.add(&term);
        }
        sum
    }

    #[test]
    fn matches_direct_summation_on_four_vertices() {
        let pool = WorkerPool::new(1);
        let result = sin_product_sum(4, 3, Budget::trig_default(), &pool).unwrap();
        let naive = direct_sum(4, 3, false);
        assert!(result.exact_value().unwrap().eq_value(&naive).unwrap());
    }

    #[test]
    fn only_ramsey_graphs_contribute() {
        let all = direct_sum(4, 3, false);
        let ramsey = direct_sum(4, 3, true);
        assert!(all.eq_value(&ramsey).unwrap());
        let all5 = direct_sum(5, 3, false);
        let ramsey5 = direct_sum(5, 3, true);
        assert!(all5.eq_value(&ramsey5).unwrap());
    }

    #[test]
    fn four_vertices_give_81_over_8() {
        // 18 Ramsey graphs, each contributing (sqrt(3)/2)^4 = 9/16.
        let pool = WorkerPool::new(2);
        let result = sin_product_sum(4, 3, Budget::trig_default(), &pool).unwrap();
        let value = result.exact_value().unwrap().as_rational().unwrap();
        assert_eq!(value, Rational::new(BigInt::from(81), BigInt::from(8)));
    }

    #[test]
    fn five_vertices_give_729_over_256() {
        let pool = WorkerPool::new(2);
        let result = sin_product_sum(5, 3, Budget::trig_default(), &pool).unwrap();
        let value = result.exact_value().unwrap().as_rational().unwrap();
        assert_eq!(value, Rational::new(BigInt::from(729), BigInt::from(256)));
        assert!(!result.is_zero);
        assert_eq!(result.implied, RamseyImplication::Below);
        assert!(result.exact_value().unwrap().to_float() > 0.0);
    }

    #[test]
    fn six_vertices_certified_zero() {
        let pool = WorkerPool::new(4);
        let result = sin_product_sum(6, 3, Budget::trig_default(), &pool).unwrap();
        assert!(result.is_zero);
        assert!(result.certified);
        assert_eq!(result.implied, RamseyImplication::AtLeast);
        assert_eq!(result.terms_evaluated, 1 << 15);
        assert_eq!(result.shards.len(), 64);
    }

    #[test]
    fn three_vertices_give_three_root_three() {
        // 6 Ramsey graphs, each contributing sin(pi/3) or sin(2 pi/3).
        let pool = WorkerPool::new(1);
        let result = sin_product_sum(3, 3, Budget::trig_default(), &pool).unwrap();
        let value = result.exact_value().unwrap();
        assert!(value.as_rational().is_none());
        assert!((value.to_float() - 3.0 * 3.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn pair_columns_vanish_identically() {
        // For k = 2 every factor is sin(0) or sin(pi).
        let pool = WorkerPool::new(1);
        let result = sin_product_sum(4, 2, Budget::trig_default(), &pool).unwrap();
        assert!(result.is_zero && result.certified);
    }

    #[test]
    fn thread_count_does_not_change_the_result() {
        let budget = Budget::trig_default();
        let serial = sin_product_sum(5, 3, budget, &WorkerPool::new(1)).unwrap();
        let parallel = sin_product_sum(5, 3, budget, &WorkerPool::new(4)).unwrap();
        let a = serial.exact_value().unwrap();
        let b = parallel.exact_value().unwrap();
        assert_eq!(a.log2_denom(), b.log2_denom());
        assert_eq!(a.numerator().coeffs(), b.numerator().coeffs());
    }

    #[test]
    fn default_budget_rejects_eight_vertices() {
        let pool = WorkerPool::new(1);
        match sin_product_sum(8, 3, Budget::trig_default(), &pool).unwrap_err() {
            Error::BudgetExceeded { predicted_log2, .. } => assert_eq!(predicted_log2, 28),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
