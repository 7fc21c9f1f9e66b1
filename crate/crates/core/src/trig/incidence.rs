//! Graph-pair cosine sums.
//!
//! The general sum ranges over every pair of a graph and a k-subset family.
//! Each term is a single signed cosine whose angle is an affine function of
//! the graph's edge count and the incidence number between the pair. The
//! angle denominators are fixed by `(n, k, q, m)`, so every term maps to a
//! residue class modulo one cyclotomic order; the evaluation only counts
//! signed terms per class and takes one short linear combination at the end.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::combinatorics::{binomial, divisibility_check, Graph};
use crate::error::{Error, Result};
use crate::exact::{order_data, CyclotomicInteger, Rational, ScaledCyclotomic, MAX_ORDER};
use crate::exec::{plan_shard_bits, WorkerPool};

use super::{
    apply_restricted_sign, column_edge_slots, gray, restricted_sign, validate_nk, FormulaResult,
    Neumaier, RestrictedSumResult, ShardPartial, TwoCosTable,
};

/// Precomputed residue data for one `(n, k, q, m)` instance.
struct IncidenceContext {
    cols: Vec<Vec<u32>>,
    edges: usize,
    /// Residues modulo the ring order of the per-edge, per-incidence, and
    /// constant angle contributions.
    alpha: u64,
    beta: u64,
    gamma: u64,
    table: TwoCosTable,
}

/// The factor `(n-2)! / (k! (n-k)!)` in lowest terms.
fn edge_count_factor(n: u32, k: u32) -> Rational {
    let kf = factorial_big(u64::from(k));
    let nkf = factorial_big(u64::from(n) - u64::from(k));
    Rational::new(factorial_big(u64::from(n) - 2), kf * nkf)
}

fn factorial_big(v: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=v {
        acc *= t;
    }
    acc
}

/// Reduces the angle family
/// `pi * (q*a*(4E - n(n-1)) + 4m*i/(k(k-1)))`
/// to residues modulo a single cyclotomic order, where `a` is the edge-count
/// factor and `E`, `i` are the per-term edge count and incidence number.
///
/// Writing `q = p/r` and `a = A/B` in lowest terms, the doubled angle over
/// the common denominator `D = r*B*k(k-1)` has numerator
/// `p*A*k(k-1)*(4E - n(n-1)) + 4m*r*B*i`, and the cosine argument is
/// `2*pi*u/(2D)`. Dividing all coefficients and `2D` by their gcd keeps the
/// ring order minimal.
fn build_incidence_context(n: u32, k: u32, q: &Rational, m: i64) -> Result<IncidenceContext> {
    let p = q.numer();
    let r = q.denom();
    let a = edge_count_factor(n, k);
    let kk1 = BigInt::from(u64::from(k) * u64::from(k - 1));
    let modulus_big = BigInt::from(2) * r * a.denom() * &kk1;
    let alpha_raw = BigInt::from(4) * p * a.numer() * &kk1;
    let beta_raw = BigInt::from(4 * m) * r * a.denom();
    let nn1 = BigInt::from(u64::from(n) * u64::from(n) - u64::from(n));
    let gamma_raw = -(p * a.numer() * &kk1 * nn1);
    let g = alpha_raw
        .gcd(&beta_raw)
        .gcd(&gamma_raw)
        .gcd(&modulus_big);
    let order_big = &modulus_big / &g;
    let order = order_big
        .to_u64()
        .filter(|&v| v <= MAX_ORDER)
        .ok_or(Error::OrderTooLarge {
            order: order_big.to_u64().unwrap_or(u64::MAX),
            max: MAX_ORDER,
        })?;
    let modulus = BigInt::from(order);
    let reduce = |v: BigInt| -> u64 {
        let m = ((v % &modulus) + &modulus) % &modulus;
        m.to_u64().expect("residue fits u64 by construction")
    };
    Ok(IncidenceContext {
        cols: column_edge_slots(n, k),
        edges: Graph::num_edge_slots(n),
        alpha: reduce(&alpha_raw / &g),
        beta: reduce(&beta_raw / &g),
        gamma: reduce(&gamma_raw / &g),
        table: TwoCosTable::build(order_data(order)?),
    })
}

/// Signed number of `(graph, family)` pairs in each residue class for the
/// family indices `lo..lo+span`.
fn count_residues(ctx: &IncidenceContext, lo: u64, span: u64) -> Vec<i64> {
    let order = ctx.table.data.order();
    let mut counts = vec![0i64; order as usize];
    let mut mult = vec![0u32; ctx.edges];
    let mask = gray(lo);
    for (s, slots) in ctx.cols.iter().enumerate() {
        if (mask >> s) & 1 == 1 {
            for &e in slots {
                mult[e as usize] += 1;
            }
        }
    }
    let mut odd = mask.count_ones() % 2 == 1;
    let mut delta = vec![0u64; ctx.edges];
    let mut j = 0u64;
    loop {
        // Inner walk over all graphs, restarting from the empty graph; the
        // residue moves by alpha + beta * mult[e] when edge e toggles on.
        for (d, &mu) in delta.iter_mut().zip(mult.iter()) {
            *d = (ctx.alpha + (ctx.beta * u64::from(mu)) % order) % order;
        }
        let sign: i64 = if odd { -1 } else { 1 };
        let mut res = ctx.gamma;
        counts[res as usize] += sign;
        let mut gcode = 0u64;
        for jg in 1..(1u64 << ctx.edges) {
            let t = jg.trailing_zeros() as usize;
            gcode ^= 1 << t;
            let inserted = (gcode >> t) & 1 == 1;
            res += if inserted {
                delta[t]
            } else {
                order - delta[t]
            };
            if res >= order {
                res -= order;
            }
            counts[res as usize] += sign;
        }
        j += 1;
        if j == span {
            return counts;
        }
        let i = lo + j;
        let t = i.trailing_zeros() as usize;
        let inserted = (gray(i) >> t) & 1 == 1;
        for &e in &ctx.cols[t] {
            let e = e as usize;
            if inserted {
                mult[e] += 1;
            } else {
                mult[e] -= 1;
            }
        }
        odd = !odd;
    }
}

fn admit_pair_walk(n: u32, k: u32, budget: Budget) -> Result<(u32, u32)> {
    let nb_big = binomial(u64::from(n), u64::from(k));
    let edges = Graph::num_edge_slots(n) as u128;
    budget.admit_log2(
        "graph-pair cosine sum",
        (nb_big + edges).min(u128::from(u32::MAX)) as u32,
    )?;
    Ok((nb_big as u32, edges as u32))
}

/// Exact value of the graph-pair cosine sum.
///
/// Certified in the same sense as the subset-family sum: the value is a
/// canonical cyclotomic residue and zero decisions read off directly.
pub fn eval_general_incidence(
    n: u32,
    k: u32,
    q: &Rational,
    m: i64,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<FormulaResult> {
    validate_nk(n, k)?;
    let start = Instant::now();
    let (nb, edges) = admit_pair_walk(n, k, budget)?;
    let ctx = build_incidence_context(n, k, q, m)?;
    let shard_bits = plan_shard_bits(nb + edges).min(nb);
    let span_bits = nb - shard_bits;
    let shards = 1usize << shard_bits;
    let shard_counts = pool.run_indexed(shards, |s| {
        count_residues(&ctx, (s as u64) << span_bits, 1u64 << span_bits)
    });
    let data = ctx.table.data.clone();
    let phi = data.phi();
    let combine = |counts: &[i64]| -> Vec<BigInt> {
        let mut num = vec![BigInt::zero(); phi];
        for (c, entry) in counts.iter().zip(&ctx.table.entries) {
            if *c == 0 {
                continue;
            }
            let factor = BigInt::from(*c);
            for (acc, coeff) in num.iter_mut().zip(entry) {
                if !coeff.is_zero() {
                    *acc += coeff * &factor;
                }
            }
        }
        num
    };
    let mut total_counts = vec![0i64; data.order() as usize];
    let mut partials = Vec::with_capacity(shards);
    for (idx, counts) in shard_counts.iter().enumerate() {
        for (t, c) in total_counts.iter_mut().zip(counts) {
            *t += c;
        }
        partials.push(ShardPartial {
            index: idx,
            lo: (idx as u64) << (span_bits + edges),
            hi: (idx as u64 + 1) << (span_bits + edges),
            partial: ScaledCyclotomic::new(
                CyclotomicInteger::from_parts(data.clone(), combine(counts)),
                1,
            ),
        });
    }
    let value = ScaledCyclotomic::new(
        CyclotomicInteger::from_parts(data.clone(), combine(&total_counts)),
        1,
    );
    Ok(FormulaResult::from_exact(
        value,
        1u64 << (nb + edges),
        start.elapsed(),
        partials,
    ))
}

/// Floating-point evaluation of the graph-pair sum with compensated
/// accumulation; the zero decision is tolerance-based, not a certificate.
pub fn eval_general_incidence_float(
    n: u32,
    k: u32,
    q: f64,
    m: i64,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<FormulaResult> {
    validate_nk(n, k)?;
    let start = Instant::now();
    let (nb, edges) = admit_pair_walk(n, k, budget)?;
    let cols = column_edge_slots(n, k);
    let a = edge_count_factor(n, k);
    let af = a.numer().to_f64().unwrap() / a.denom().to_f64().unwrap();
    let kk1 = f64::from(k) * f64::from(k - 1);
    let nn1 = f64::from(n) * (f64::from(n) - 1.0);
    let pi = std::f64::consts::PI;
    let shard_bits = plan_shard_bits(nb + edges).min(nb);
    let span_bits = nb - shard_bits;
    let shards = 1usize << shard_bits;
    let partials = pool.run_indexed(shards, |s| {
        let lo = (s as u64) << span_bits;
        let span = 1u64 << span_bits;
        let mut acc = Neumaier::default();
        let mut mult = vec![0u32; edges as usize];
        let mask = gray(lo);
        for (sc, slots) in cols.iter().enumerate() {
            if (mask >> sc) & 1 == 1 {
                for &e in slots {
                    mult[e as usize] += 1;
                }
            }
        }
        let mut odd = mask.count_ones() % 2 == 1;
        let mut j = 0u64;
        loop {
            let sign = if odd { -1.0 } else { 1.0 };
            let mut eg: i64 = 0;
            let mut inc: i64 = 0;
            let mut gcode = 0u64;
            let theta0 = pi * q * af * (4.0 * eg as f64 - nn1);
            acc.add(sign * theta0.cos());
            for jg in 1..(1u64 << edges) {
                let t = jg.trailing_zeros() as usize;
                gcode ^= 1 << t;
                if (gcode >> t) & 1 == 1 {
                    eg += 1;
                    inc += i64::from(mult[t]);
                } else {
                    eg -= 1;
                    inc -= i64::from(mult[t]);
                }
                let theta = pi * q * af * (4.0 * eg as f64 - nn1)
                    + 4.0 * pi * m as f64 * inc as f64 / kk1;
                acc.add(sign * theta.cos());
            }
            j += 1;
            if j == span {
                return acc.total();
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
            odd = !odd;
        }
    });
    let mut total = Neumaier::default();
    for p in partials {
        total.add(p);
    }
    Ok(FormulaResult::from_float(
        total.total(),
        1u64 << (nb + edges),
        start.elapsed(),
    ))
}

/// Exact value of the restricted graph-pair sum, defined only when `(n-2)!`
/// is divisible by `k!(n-k)!`; equals the general sum at `q = -1/2, m = 1`
/// times the same sign as the restricted subset-family sum.
pub fn eval_restricted_incidence(
    n: u32,
    k: u32,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<RestrictedSumResult> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "restricted sums need k >= 3, got k = {k}"
        )));
    }
    // Same guard order as the restricted subset-family sum: hypothesis and
    // budget are meaningful at any size and take precedence over the
    // enumeration domain cap.
    let report = divisibility_check(n, k)?;
    let quotient = report
        .quotient
        .ok_or(Error::DivisibilityHypothesis { n, k })?;
    let nb_big = binomial(u64::from(n), u64::from(k));
    let edges = u64::from(n) * u64::from(n - 1) / 2;
    budget.admit_log2(
        "graph-pair cosine sum",
        (nb_big + u128::from(edges)).min(u128::from(u32::MAX)) as u32,
    )?;
    validate_nk(n, k)?;
    let q = Rational::new(BigInt::from(-1), BigInt::from(2));
    let general = eval_general_incidence(n, k, &q, 1, budget, pool)?;
    let sign = restricted_sign(&quotient, n);
    Ok(apply_restricted_sign(general, sign, quotient))
}
