//! Subset-family cosine sums.
//!
//! The general sum ranges over every family of k-subset columns. Each term
//! is a signed product, over the edge slots, of cosines whose angles depend
//! affinely on how many chosen columns cover the slot. All angles are
//! rational multiples of pi, so after clearing denominators each term lives
//! in a single cyclotomic ring and the whole sum reduces exactly.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::budget::Budget;
use crate::combinatorics::{binomial, divisibility_check, Graph};
use crate::error::{Error, Result};
use crate::exact::{order_data, CyclotomicInteger, Rational, ScaledCyclotomic, MAX_ORDER};
use crate::exec::{plan_shard_bits, WorkerPool};

use super::{
    apply_restricted_sign, column_edge_slots, gray, restricted_sign, validate_nk, FormulaResult,
    Neumaier, RestrictedSumResult, ShardPartial, TwoCosTable,
};

/// Above this many bits of worst-case magnitude the integer fast path could
/// overflow an `i128` accumulator, so the generic ring path is used instead.
const INT_PATH_BITS: u64 = 120;

/// Precomputed residue tables for one `(n, k, q, m)` instance.
struct MultContext {
    /// Edge slots covered by each column, indexed by colex rank.
    cols: Vec<Vec<u32>>,
    edges: usize,
    /// Residue class of the cosine angle for each possible multiplicity.
    res_of_mult: Vec<u32>,
    /// Whether the doubled cosine vanishes at each multiplicity.
    zero_of_mult: Vec<bool>,
    table: TwoCosTable,
    /// Terms carry the parity sign only when `m` is even.
    sign_on_parity: bool,
    use_int_path: bool,
}

/// Reduces the angle family `2*pi*(q*c2 + m*mult)/(k(k-1))` to residues
/// modulo a single cyclotomic order.
///
/// Writing `q = p/r`, the doubled-cosine angle at multiplicity `mu` is
/// `2*pi*(p*c2 + r*m*mu) / (r*k(k-1))`. Dividing numerator offsets, the
/// numerator step, and the denominator by their gcd keeps the ring order as
/// small as the instance allows.
fn build_mult_context(n: u32, k: u32, q: &Rational, m: i64) -> Result<MultContext> {
    let c2 = binomial(u64::from(n) - 2, u64::from(k) - 2) as u64;
    let p = q.numer();
    let r = q.denom();
    let kk1 = BigInt::from(u64::from(k) * u64::from(k - 1));
    let d0 = r * &kk1;
    let off = p * BigInt::from(c2);
    let step = r * BigInt::from(m);
    let g = off.gcd(&step).gcd(&d0);
    let order_big = &d0 / &g;
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
    let base = reduce(&off / &g);
    let stride = reduce(&step / &g);
    let mut res_of_mult = Vec::with_capacity(c2 as usize + 1);
    let mut cur = base;
    for _ in 0..=c2 {
        res_of_mult.push(cur as u32);
        cur = (cur + stride) % order;
    }
    let table = TwoCosTable::build(order_data(order)?);
    let zero_of_mult = res_of_mult
        .iter()
        .map(|&res| table.is_zero[res as usize])
        .collect();
    let cols = column_edge_slots(n, k);
    let edges = Graph::num_edge_slots(n);
    let use_int_path =
        table.as_ints.is_some() && (cols.len() as u64 + edges as u64) < INT_PATH_BITS;
    Ok(MultContext {
        cols,
        edges,
        res_of_mult,
        zero_of_mult,
        table,
        sign_on_parity: m % 2 == 0,
        use_int_path,
    })
}

/// Walks the subset families with indices `lo..lo+span` in reflected Gray
/// order, maintaining per-slot multiplicities incrementally.
///
/// `visit` receives the multiplicity array and the family-size parity. When
/// `zero_of_mult` is supplied, families containing a vanishing cosine factor
/// are skipped without calling `visit`.
fn walk_subset_states<F>(
    cols: &[Vec<u32>],
    edges: usize,
    zero_of_mult: Option<&[bool]>,
    lo: u64,
    span: u64,
    mut visit: F,
) where
    F: FnMut(&[u32], bool),
{
    let mut mult = vec![0u32; edges];
    let mask = gray(lo);
    for (s, slots) in cols.iter().enumerate() {
        if (mask >> s) & 1 == 1 {
            for &e in slots {
                mult[e as usize] += 1;
            }
        }
    }
    let mut parity = mask.count_ones() % 2 == 1;
    let mut zero_cnt = match zero_of_mult {
        Some(zf) => mult.iter().filter(|&&mu| zf[mu as usize]).count(),
        None => 0,
    };
    let mut j = 0u64;
    loop {
        if zero_cnt == 0 {
            visit(&mult, parity);
        }
        j += 1;
        if j == span {
            return;
        }
        let i = lo + j;
        let t = i.trailing_zeros() as usize;
        // Successive Gray codes differ in bit `t`; the new mask tells the direction.
        let inserted = (gray(i) >> t) & 1 == 1;
        for &e in &cols[t] {
            let e = e as usize;
            if let Some(zf) = zero_of_mult {
                zero_cnt -= zf[mult[e] as usize] as usize;
            }
            if inserted {
                mult[e] += 1;
            } else {
                mult[e] -= 1;
            }
            if let Some(zf) = zero_of_mult {
                zero_cnt += zf[mult[e] as usize] as usize;
            }
        }
        parity = !parity;
    }
}

/// Evaluates one shard and returns the canonical coefficient vector of the
/// doubled-cosine partial sum.
fn eval_mult_shard(ctx: &MultContext, lo: u64, span: u64) -> Vec<BigInt> {
    let phi = ctx.table.data.phi();
    if ctx.use_int_path {
        let ints = ctx.table.as_ints.as_ref().expect("int path requires table");
        let mut acc: i128 = 0;
        walk_subset_states(
            &ctx.cols,
            ctx.edges,
            Some(&ctx.zero_of_mult),
            lo,
            span,
            |mult, odd| {
                let mut prod: i128 = 1;
                for &mu in mult {
                    prod *= i128::from(ints[ctx.res_of_mult[mu as usize] as usize]);
                }
                if ctx.sign_on_parity && odd {
                    acc -= prod;
                } else {
                    acc += prod;
                }
            },
        );
        let mut out = vec![BigInt::zero(); phi];
        out[0] = BigInt::from(acc);
        out
    } else {
        let data = &ctx.table.data;
        let mut unit = vec![BigInt::zero(); phi];
        unit[0] = BigInt::from(1);
        let mut acc = vec![BigInt::zero(); phi];
        walk_subset_states(
            &ctx.cols,
            ctx.edges,
            Some(&ctx.zero_of_mult),
            lo,
            span,
            |mult, odd| {
                let mut prod = unit.clone();
                for &mu in mult {
                    let entry = &ctx.table.entries[ctx.res_of_mult[mu as usize] as usize];
                    prod = data.mul_reduce(&prod, entry);
                }
                if ctx.sign_on_parity && odd {
                    for (a, p) in acc.iter_mut().zip(&prod) {
                        *a -= p;
                    }
                } else {
                    for (a, p) in acc.iter_mut().zip(&prod) {
                        *a += p;
                    }
                }
            },
        );
        acc
    }
}

/// Exact value of the subset-family cosine sum.
///
/// The result is certified: its value is the canonical residue of the sum in
/// the smallest cyclotomic ring containing every term, scaled by a power of
/// two, and the zero decision reads off that representation.
pub fn eval_general_mult(
    n: u32,
    k: u32,
    q: &Rational,
    m: i64,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<FormulaResult> {
    validate_nk(n, k)?;
    let start = Instant::now();
    let nb_big = binomial(u64::from(n), u64::from(k));
    budget.admit_log2(
        "subset cosine sum",
        nb_big.min(u128::from(u32::MAX)) as u32,
    )?;
    let nb = nb_big as u32;
    let ctx = build_mult_context(n, k, q, m)?;
    let shard_bits = plan_shard_bits(nb);
    let span_bits = nb - shard_bits;
    let shards = 1usize << shard_bits;
    let raws = pool.run_indexed(shards, |s| {
        eval_mult_shard(&ctx, (s as u64) << span_bits, 1u64 << span_bits)
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
            partial: ScaledCyclotomic::new(
                CyclotomicInteger::from_parts(data.clone(), raw),
                ctx.edges as u32,
            ),
        });
    }
    let value = ScaledCyclotomic::new(
        CyclotomicInteger::from_parts(data, total),
        ctx.edges as u32,
    );
    Ok(FormulaResult::from_exact(
        value,
        1u64 << nb,
        start.elapsed(),
        partials,
    ))
}

/// Floating-point evaluation of the same sum with compensated accumulation.
///
/// The zero decision compares against a tolerance that scales with the term
/// count; it is a plausibility check, not a certificate.
pub fn eval_general_mult_float(
    n: u32,
    k: u32,
    q: f64,
    m: i64,
    budget: Budget,
    pool: &WorkerPool,
) -> Result<FormulaResult> {
    validate_nk(n, k)?;
    let start = Instant::now();
    let nb_big = binomial(u64::from(n), u64::from(k));
    budget.admit_log2(
        "subset cosine sum",
        nb_big.min(u128::from(u32::MAX)) as u32,
    )?;
    let nb = nb_big as u32;
    let c2 = binomial(u64::from(n) - 2, u64::from(k) - 2) as u64;
    let kk1 = f64::from(k) * f64::from(k - 1);
    let cos_of_mult: Vec<f64> = (0..=c2)
        .map(|mu| {
            let angle = 2.0 * std::f64::consts::PI * (q * c2 as f64 + m as f64 * mu as f64) / kk1;
            angle.cos()
        })
        .collect();
    let cols = column_edge_slots(n, k);
    let edges = Graph::num_edge_slots(n);
    let sign_on_parity = m % 2 == 0;
    let shard_bits = plan_shard_bits(nb);
    let span_bits = nb - shard_bits;
    let shards = 1usize << shard_bits;
    let partials = pool.run_indexed(shards, |s| {
        let mut acc = Neumaier::default();
        walk_subset_states(
            &cols,
            edges,
            None,
            (s as u64) << span_bits,
            1u64 << span_bits,
            |mult, odd| {
                let mut prod = 1.0f64;
                for &mu in mult {
                    prod *= cos_of_mult[mu as usize];
                }
                if sign_on_parity && odd {
                    acc.add(-prod);
                } else {
                    acc.add(prod);
                }
            },
        );
        acc.total()
    });
    let mut total = Neumaier::default();
    for p in partials {
        total.add(p);
    }
    Ok(FormulaResult::from_float(
        total.total(),
        1u64 << nb,
        start.elapsed(),
    ))
}

/// Exact value of the restricted subset-family sum, defined only when
/// `(n-2)!` is divisible by `k!(n-k)!`.
///
/// The restricted sum equals the general sum at `q = -1/2, m = 1` up to a
/// sign determined by the quotient and the number of edge slots, so it is
/// evaluated through the same walk and the sign is applied afterwards.
pub fn eval_restricted_mult(
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
    // Guard order matters for large instances: the hypothesis and the term
    // budget are checkable at any size and must be reported before the
    // enumeration domain cap ever comes into play.
    let report = divisibility_check(n, k)?;
    let quotient = report
        .quotient
        .ok_or(Error::DivisibilityHypothesis { n, k })?;
    let nb_big = binomial(u64::from(n), u64::from(k));
    budget.admit_log2(
        "subset cosine sum",
        nb_big.min(u128::from(u32::MAX)) as u32,
    )?;
    validate_nk(n, k)?;
    let q = Rational::new(BigInt::from(-1), BigInt::from(2));
    let general = eval_general_mult(n, k, &q, 1, budget, pool)?;
    let sign = restricted_sign(&quotient, n);
    Ok(apply_restricted_sign(general, sign, quotient))
}
