//! Cyclotomic integers in canonical form.
//!
//! An element of `Z[zeta_N]` is stored as its residue modulo the N-th
//! cyclotomic polynomial: a coefficient vector of length `phi(N)` on the
//! basis `1, zeta, ..., zeta^(phi(N)-1)`.  Because `Phi_N` is the minimal
//! polynomial of `zeta_N`, this form is canonical, so an element is zero
//! exactly when every coefficient is zero.  That turns "does this sum of
//! cosines vanish" into an integer computation with no tolerance anywhere.
//!
//! `cos(pi p / q)` is `(zeta + zeta^-1)/2` at order `2q`, so sums of such
//! cosines live in `(1/2^s) Z[zeta_N]`; [`ScaledCyclotomic`] tracks the
//! power-of-two denominator explicitly.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{DyadicRational, IntPolynomial, Rational};
use crate::error::{Error, Result};

/// Largest supported cyclotomic order.
pub const MAX_ORDER: u64 = 10_000;

fn check_order(order: u64) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers (internal; coefficients in increasing degree).

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Exact division by a monic divisor; panics if the remainder is nonzero,
/// which cannot happen for cyclotomic factors of `x^n - 1`.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().is_some_and(|c| c.is_one()));
    let mut rem: Vec<BigInt> = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() <= dd {
        assert!(rem.is_empty(), "non-exact division");
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for j in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[j], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate().take(dd) {
            let delta = &c * d;
            rem[j - dd + i] -= delta;
        }
        quot[j - dd] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quot
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dense coefficients of the n-th cyclotomic polynomial, memoized.
fn phi_dense(n: u64) -> Result<Arc<Vec<BigInt>>> {
    check_order(n)?;
    if let Some(hit) = phi_cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n.
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    acc[0] = BigInt::from(-1);
    acc[n as usize] = BigInt::one();
    for d in 1..=n / 2 {
        if n % d == 0 {
            let pd = phi_dense(d)?;
            acc = div_exact_monic(&acc, &pd);
        }
    }
    trim(&mut acc);
    let arc = Arc::new(acc);
    phi_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone());
    Ok(arc)
}

/// The n-th cyclotomic polynomial, `1 <= n <= 10^4`.
pub fn cyclotomic_polynomial(n: u64) -> Result<IntPolynomial> {
    Ok(IntPolynomial::from_dense(&phi_dense(n)?))
}

// ---------------------------------------------------------------------------
// Per-order reduction data.

/// Shared reduction data for one cyclotomic order: the modulus `Phi_N` and
/// the residues of `x^(phi), ..., x^(2 phi - 1)`, which every product
/// reduction and power computation reuses.
pub struct OrderData {
    order: u64,
    phi: usize,
    modulus: Arc<Vec<BigInt>>,
    red_rows: Vec<Vec<BigInt>>,
}

impl OrderData {
    fn build(order: u64) -> Result<OrderData> {
        let modulus = phi_dense(order)?;
        let phi = modulus.len() - 1;
        // x^phi = -(low-order part of Phi_N).
        let base: Vec<BigInt> = modulus[..phi].iter().map(|c| -c).collect();
        let mut red_rows = Vec::with_capacity(phi);
        red_rows.push(base);
        for _ in 1..phi {
            let prev = red_rows.last().unwrap();
            red_rows.push(shift_reduce(prev, &red_rows[0]));
        }
        Ok(OrderData {
            order,
            phi,
            modulus,
            red_rows,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree of `Phi_N`, i.e. Euler's totient of the order.
    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Canonical coefficients of `x^t` for any exponent (reduced mod N).
    pub fn zeta_pow_dense(&self, t: u64) -> Vec<BigInt> {
        let t = (t % self.order) as usize;
        if t < self.phi {
            let mut v = vec![BigInt::zero(); self.phi];
            v[t] = BigInt::one();
            return v;
        }
        if t < 2 * self.phi {
            return self.red_rows[t - self.phi].clone();
        }
        let mut row = self.red_rows[self.phi - 1].clone();
        for _ in (2 * self.phi)..=t {
            row = shift_reduce(&row, &self.red_rows[0]);
        }
        row
    }

    /// Canonical coefficients of `x^0, ..., x^(count-1)`.
    pub fn power_table(&self, count: usize) -> Vec<Vec<BigInt>> {
        let mut table = Vec::with_capacity(count);
        if count == 0 {
            return table;
        }
        let mut row = vec![BigInt::zero(); self.phi];
        row[0] = BigInt::one();
        table.push(row);
        for _ in 1..count {
            table.push(shift_reduce(table.last().unwrap(), &self.red_rows[0]));
        }
        table
    }

    /// Product of two canonical coefficient vectors, reduced.
    pub(crate) fn mul_reduce(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let phi = self.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    prod[i + j] += ai * bj;
                }
            }
        }
        for j in (phi..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[j], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            let row = &self.red_rows[j - phi];
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    prod[i] += &c * r;
                }
            }
        }
        prod.truncate(phi);
        prod
    }
}

/// Multiplies a canonical vector by `x` and reduces once.
fn shift_reduce(row: &[BigInt], xpow_phi: &[BigInt]) -> Vec<BigInt> {
    let phi = row.len();
    let mut out = vec![BigInt::zero(); phi];
    for i in 0..phi - 1 {
        out[i + 1] = row[i].clone();
    }
    let carry = &row[phi - 1];
    if !carry.is_zero() {
        for (i, r) in xpow_phi.iter().enumerate() {
            if !r.is_zero() {
                out[i] += carry * r;
            }
        }
    }
    out
}

fn order_cache() -> &'static Mutex<HashMap<u64, Arc<OrderData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<OrderData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Reduction data for order `n`, cached for the process lifetime.
pub fn order_data(n: u64) -> Result<Arc<OrderData>> {
    if let Some(hit) = order_cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let built = Arc::new(OrderData::build(n)?);
    Ok(order_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(built)
        .clone())
}

// ---------------------------------------------------------------------------
// Cyclotomic integers.

/// An element of `Z[zeta_N]` in canonical (reduced) coordinates.
///
/// Arithmetic requires both operands to share the order; use
/// [`CyclotomicInteger::lift_to`] for explicit coercion to a multiple of
/// the order.  Equality is coefficient-wise at equal order; use
/// [`CyclotomicInteger::eq_value`] to compare across orders.
#[derive(Clone)]
pub struct CyclotomicInteger {
    data: Arc<OrderData>,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInteger {
    pub fn zero(order: u64) -> Result<Self> {
        let data = order_data(order)?;
        let coeffs = vec![BigInt::zero(); data.phi];
        Ok(CyclotomicInteger { data, coeffs })
    }

    pub fn from_integer(order: u64, value: BigInt) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = value;
        Ok(z)
    }

    /// `zeta_N^t` in canonical form; `t` is reduced modulo `N`.
    pub fn zeta_pow(order: u64, t: u64) -> Result<Self> {
        let data = order_data(order)?;
        let coeffs = data.zeta_pow_dense(t);
        Ok(CyclotomicInteger { data, coeffs })
    }

    pub(crate) fn from_parts(data: Arc<OrderData>, coeffs: Vec<BigInt>) -> Self {
        debug_assert_eq!(coeffs.len(), data.phi);
        CyclotomicInteger { data, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.data.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// When the element lies in `Z`, its value.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn all_coeffs_even(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_even())
    }

    fn assert_same_order(&self, other: &Self, op: &str) {
        assert_eq!(
            self.order(),
            other.order(),
            "{op} on mismatched cyclotomic orders; lift explicitly first"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other, "add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicInteger {
            data: self.data.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other, "sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicInteger {
            data: self.data.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger {
            data: self.data.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other, "mul");
        let coeffs = self.data.mul_reduce(&self.coeffs, &other.coeffs);
        CyclotomicInteger {
            data: self.data.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        CyclotomicInteger {
            data: self.data.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.assert_same_order(other, "add");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// Reinterprets the element in `Z[zeta_M]` for a multiple `M` of the
    /// order, via `zeta_N = zeta_M^(M/N)`.
    pub fn lift_to(&self, target: u64) -> Result<Self> {
        if target == self.order() {
            return Ok(self.clone());
        }
        if target % self.order() != 0 {
            return Err(Error::InvalidParameter(format!(
                "cannot lift from order {} to non-multiple {target}",
                self.order()
            )));
        }
        let data = order_data(target)?;
        let stride = target / self.order();
        let mut coeffs = vec![BigInt::zero(); data.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = data.zeta_pow_dense(j as u64 * stride);
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    coeffs[i] += c * r;
                }
            }
        }
        Ok(CyclotomicInteger { data, coeffs })
    }

    /// Value equality, lifting to the least common order if necessary.
    pub fn eq_value(&self, other: &Self) -> Result<bool> {
        if self.order() == other.order() {
            return Ok(self.coeffs == other.coeffs);
        }
        let m = self.order().lcm(&other.order());
        Ok(self.lift_to(m)?.coeffs == other.lift_to(m)?.coeffs)
    }

    /// Complex image under `zeta_N -> exp(2 pi i / N)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }

    pub fn re_float(&self) -> f64 {
        self.to_complex().0
    }
}

impl PartialEq for CyclotomicInteger {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInteger {}

impl std::fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyc(order={}, coeffs={:?})", self.order(), self.coeffs)
    }
}

// ---------------------------------------------------------------------------
// Scaled cyclotomic values.

/// A cyclotomic integer divided by a power of two, normalized so the
/// numerator is not divisible by 2 unless the exponent is zero (and zero
/// is stored with exponent zero).  This is the natural home of sums of
/// products of cosines of rational multiples of pi.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledCyclotomic {
    num: CyclotomicInteger,
    log2_denom: u32,
}

impl ScaledCyclotomic {
    pub fn new(num: CyclotomicInteger, log2_denom: u32) -> Self {
        let mut s = ScaledCyclotomic { num, log2_denom };
        s.normalize();
        s
    }

    pub fn zero(order: u64) -> Result<Self> {
        Ok(ScaledCyclotomic {
            num: CyclotomicInteger::zero(order)?,
            log2_denom: 0,
        })
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.log2_denom = 0;
            return;
        }
        while self.log2_denom > 0 && self.num.all_coeffs_even() {
            for c in self.num.coeffs.iter_mut() {
                *c >>= 1;
            }
            self.log2_denom -= 1;
        }
    }

    pub fn numerator(&self) -> &CyclotomicInteger {
        &self.num
    }

    pub fn log2_denom(&self) -> u32 {
        self.log2_denom
    }

    pub fn order(&self) -> u64 {
        self.num.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let s = self.log2_denom.max(other.log2_denom);
        let a = self
            .num
            .scale(&(BigInt::one() << (s - self.log2_denom)));
        let b = other
            .num
            .scale(&(BigInt::one() << (s - other.log2_denom)));
        ScaledCyclotomic::new(a.add(&b), s)
    }

    pub fn mul(&self, other: &Self) -> Self {
        ScaledCyclotomic::new(self.num.mul(&other.num), self.log2_denom + other.log2_denom)
    }

    pub fn neg(&self) -> Self {
        ScaledCyclotomic {
            num: self.num.neg(),
            log2_denom: self.log2_denom,
        }
    }

    pub fn scale_int(&self, factor: &BigInt) -> Self {
        ScaledCyclotomic::new(self.num.scale(factor), self.log2_denom)
    }

    pub fn lift_to(&self, target: u64) -> Result<Self> {
        Ok(ScaledCyclotomic {
            num: self.num.lift_to(target)?,
            log2_denom: self.log2_denom,
        })
    }

    /// Value equality across orders; both sides are normalized, so equal
    /// values share the denominator exponent.
    pub fn eq_value(&self, other: &Self) -> Result<bool> {
        Ok(self.log2_denom == other.log2_denom && self.num.eq_value(&other.num)?)
    }

    /// When the value is rational, returns it.
    pub fn as_rational(&self) -> Option<Rational> {
        self.num.as_integer().map(|n| {
            Rational::new(n.clone(), BigInt::one() << self.log2_denom)
        })
    }

    /// When the value is rational, returns it as a dyadic rational.
    pub fn as_dyadic(&self) -> Option<DyadicRational> {
        self.num
            .as_integer()
            .map(|n| DyadicRational::new(n.clone(), self.log2_denom))
    }

    pub fn to_float(&self) -> f64 {
        self.num.re_float() / (self.log2_denom as f64).exp2()
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let (re, im) = self.num.to_complex();
        let d = (self.log2_denom as f64).exp2();
        (re / d, im / d)
    }
}

// ---------------------------------------------------------------------------
// Trigonometric constructors.

/// `cos(pi p / q)` as an exact value in `Z[zeta_2q] / 2`.
pub fn cos_pi_rational(p: i64, q: u64) -> Result<ScaledCyclotomic> {
    if q == 0 {
        return Err(Error::InvalidParameter(
            "cosine denominator must be positive".into(),
        ));
    }
    let order = 2 * q;
    check_order(order)?;
    let a = p.rem_euclid(order as i64) as u64;
    let fwd = CyclotomicInteger::zeta_pow(order, a)?;
    let bwd = CyclotomicInteger::zeta_pow(order, (order - a) % order)?;
    Ok(ScaledCyclotomic::new(fwd.add(&bwd), 1))
}

/// `sin(pi p / q)` as an exact value, via `sin x = cos(pi/2 - x)`.
pub fn sin_pi_rational(p: i64, q: u64) -> Result<ScaledCyclotomic> {
    if q == 0 {
        return Err(Error::InvalidParameter(
            "sine denominator must be positive".into(),
        ));
    }
    let order = 4 * q;
    check_order(order)?;
    let reduced = (q as i128 - 2 * p as i128).rem_euclid(order as i128) as i64;
    cos_pi_rational(reduced, 2 * q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn phi_poly(n: u64) -> IntPolynomial {
        cyclotomic_polynomial(n).unwrap()
    }

    #[test]
    fn cyclotomic_polynomial_small_orders() {
        // Phi_1 = x - 1, Phi_2 = x + 1, Phi_6 = x^2 - x + 1.
        assert_eq!(phi_poly(1).to_dense(), vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(phi_poly(2).to_dense(), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(
            phi_poly(6).to_dense(),
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]
        );
        // Phi_12 = x^4 - x^2 + 1; at x = 2 it is 13.
        let p12 = phi_poly(12);
        assert_eq!(p12.degree(), Some(4));
        assert_eq!(p12.eval_int(&BigInt::from(2)), BigInt::from(13));
        // Phi_p for prime p is 1 + x + ... + x^(p-1).
        for p in [3u64, 5, 7, 11] {
            let poly = phi_poly(p);
            assert_eq!(poly.degree(), Some(p - 1));
            assert!(poly.iter().all(|(_, c)| c.is_one()));
        }
        // Degrees are Euler's totient.
        for (n, tot) in [(8u64, 4u64), (9, 6), (10, 4), (24, 8), (105, 48)] {
            assert_eq!(phi_poly(n).degree(), Some(tot));
        }
    }

    #[test]
    fn cyclotomic_factorization_of_x_n_minus_1() {
        // prod over d | n of Phi_d = x^n - 1.
        for n in [1u64, 2, 6, 12, 30] {
            let mut prod = IntPolynomial::monomial(0, BigInt::one());
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&phi_poly(d));
                }
            }
            let mut expect = IntPolynomial::monomial(n, BigInt::one());
            expect.add_to_coeff(0, &BigInt::from(-1));
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn order_bound_is_enforced() {
        assert!(cyclotomic_polynomial(10_000).is_ok());
        assert!(matches!(
            cyclotomic_polynomial(10_001),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(cyclotomic_polynomial(0).is_err());
    }

    fn random_element(order: u64, rng: &mut ChaCha8Rng) -> CyclotomicInteger {
        let data = order_data(order).unwrap();
        let coeffs = (0..data.phi())
            .map(|_| BigInt::from(rng.gen_range(-50i64..=50)))
            .collect();
        CyclotomicInteger::from_parts(data, coeffs)
    }

    #[test]
    fn ring_axioms_hold_at_assorted_orders() {
        let mut rng = ChaCha8Rng::seed_from_u64(20260822);
        for &order in &[1u64, 2, 3, 4, 6, 12, 24] {
            for _ in 0..200 {
                let a = random_element(order, &mut rng);
                let b = random_element(order, &mut rng);
                let c = random_element(order, &mut rng);
                assert_eq!(a.add(&b), b.add(&a));
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(
                    a.mul(&b.add(&c)),
                    a.mul(&b).add(&a.mul(&c))
                );
                assert_eq!(a.add(&a.neg()), CyclotomicInteger::zero(order).unwrap());
                let one = CyclotomicInteger::from_integer(order, BigInt::one()).unwrap();
                assert_eq!(a.mul(&one), a);
            }
        }
    }

    #[test]
    fn zeta_satisfies_its_defining_relations() {
        for &order in &[2u64, 3, 4, 6, 8, 12, 30] {
            let zeta = CyclotomicInteger::zeta_pow(order, 1).unwrap();
            // zeta^N = 1.
            let mut pow = CyclotomicInteger::from_integer(order, BigInt::one()).unwrap();
            for _ in 0..order {
                pow = pow.mul(&zeta);
            }
            assert_eq!(pow.as_integer(), Some(&BigInt::one()));
            // Power table agrees with repeated multiplication.
            let data = order_data(order).unwrap();
            let table = data.power_table(order as usize);
            let mut acc = CyclotomicInteger::from_integer(order, BigInt::one()).unwrap();
            for t in 0..order as usize {
                assert_eq!(acc.coeffs(), &table[t][..], "order {order}, power {t}");
                assert_eq!(
                    &table[t][..],
                    &data.zeta_pow_dense(t as u64)[..],
                    "zeta_pow_dense disagrees at {t}"
                );
                acc = acc.mul(&zeta);
            }
            // Geometric sum over all powers vanishes for order > 1.
            let mut sum = CyclotomicInteger::zero(order).unwrap();
            for t in 0..order {
                sum.add_assign(&CyclotomicInteger::zeta_pow(order, t).unwrap());
            }
            assert!(sum.is_zero(), "geometric sum at order {order}");
        }
    }

    #[test]
    fn lift_preserves_value() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = random_element(6, &mut rng);
            let lifted = a.lift_to(24).unwrap();
            assert_eq!(lifted.order(), 24);
            assert!(a.eq_value(&lifted).unwrap());
            // Lifting respects products.
            let b = random_element(6, &mut rng);
            let lhs = a.mul(&b).lift_to(24).unwrap();
            let rhs = lifted.mul(&b.lift_to(24).unwrap());
            assert_eq!(lhs, rhs);
            // Float images coincide.
            assert!((a.re_float() - lifted.re_float()).abs() < 1e-9);
        }
        assert!(random_element(6, &mut rng).lift_to(9).is_err());
    }

    #[test]
    fn cosine_of_pi_thirds_is_one_half() {
        let c = cos_pi_rational(1, 3).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.log2_denom(), 1);
        assert_eq!(
            c.as_rational(),
            Some(Rational::new(BigInt::one(), BigInt::from(2)))
        );
        assert_eq!(cos_pi_rational(0, 1).unwrap().as_rational(), Some(Rational::one()));
        assert_eq!(
            cos_pi_rational(1, 1).unwrap().as_rational(),
            Some(Rational::from_integer(BigInt::from(-1)))
        );
        assert!(cos_pi_rational(1, 2).unwrap().is_zero());
        // cos(pi/6) is irrational: sqrt(3)/2.
        let c6 = cos_pi_rational(1, 6).unwrap();
        assert!(c6.as_rational().is_none());
        assert!((c6.to_float() - 0.86602540378443864676).abs() < 1e-12);
    }

    #[test]
    fn cosine_is_even_and_periodic() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let q = rng.gen_range(1u64..=30);
            let p = rng.gen_range(-200i64..=200);
            let base = cos_pi_rational(p, q).unwrap();
            assert_eq!(cos_pi_rational(-p, q).unwrap(), base, "evenness at {p}/{q}");
            assert_eq!(
                cos_pi_rational(p + 2 * q as i64, q).unwrap(),
                base,
                "periodicity at {p}/{q}"
            );
            // Float image tracks the transcendental function.
            let expect = (std::f64::consts::PI * p as f64 / q as f64).cos();
            assert!(
                (base.to_float() - expect).abs() < 1e-12,
                "float image at {p}/{q}"
            );
        }
    }

    #[test]
    fn product_to_sum_identity() {
        // cos A cos B = (cos(A+B) + cos(A-B)) / 2, entirely in exact form.
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for _ in 0..100 {
            let q1 = rng.gen_range(1u64..=15);
            let q2 = rng.gen_range(1u64..=15);
            let p1 = rng.gen_range(-40i64..=40);
            let p2 = rng.gen_range(-40i64..=40);
            let order = 2 * q1.lcm(&q2);
            let a = cos_pi_rational(p1, q1).unwrap().lift_to(order).unwrap();
            let b = cos_pi_rational(p2, q2).unwrap().lift_to(order).unwrap();
            let lhs = a.mul(&b);
            // A + B = pi (p1 q2 + p2 q1) / (q1 q2), and similarly A - B.
            let qq = q1 * q2;
            let sum = cos_pi_rational(p1 * q2 as i64 + p2 * q1 as i64, qq).unwrap();
            let diff = cos_pi_rational(p1 * q2 as i64 - p2 * q1 as i64, qq).unwrap();
            let mut rhs = sum.add(&diff);
            rhs = ScaledCyclotomic::new(rhs.numerator().clone(), rhs.log2_denom() + 1);
            assert!(
                lhs.eq_value(&rhs).unwrap(),
                "identity fails at p1={p1} q1={q1} p2={p2} q2={q2}"
            );
        }
    }

    #[test]
    fn sine_values() {
        assert!(sin_pi_rational(0, 1).unwrap().is_zero());
        assert!(sin_pi_rational(1, 1).unwrap().is_zero());
        assert_eq!(
            sin_pi_rational(1, 2).unwrap().as_rational(),
            Some(Rational::one())
        );
        assert_eq!(
            sin_pi_rational(1, 6).unwrap().as_rational(),
            Some(Rational::new(BigInt::one(), BigInt::from(2)))
        );
        assert_eq!(
            sin_pi_rational(-1, 2).unwrap().as_rational(),
            Some(Rational::from_integer(BigInt::from(-1)))
        );
        // sin(pi/3) = sqrt(3)/2.
        let s = sin_pi_rational(1, 3).unwrap();
        assert!((s.to_float() - 0.86602540378443864676).abs() < 1e-12);
        // sin^2 + cos^2 = 1 for a handful of angles.
        for (p, q) in [(1i64, 3u64), (2, 5), (3, 7), (5, 12)] {
            let order = 4 * q;
            let s = sin_pi_rational(p, q).unwrap().lift_to(order).unwrap();
            let c = cos_pi_rational(p, q).unwrap().lift_to(order).unwrap();
            let total = s.mul(&s).add(&c.mul(&c));
            assert_eq!(
                total.as_rational(),
                Some(Rational::one()),
                "pythagorean identity at {p}/{q}"
            );
        }
    }

    #[test]
    fn scaled_normalization_and_zero_form() {
        let data = order_data(6).unwrap();
        let raw = CyclotomicInteger::from_parts(
            data.clone(),
            vec![BigInt::from(8), BigInt::from(4)],
        );
        let s = ScaledCyclotomic::new(raw, 3);
        assert_eq!(s.log2_denom(), 1);
        assert_eq!(s.numerator().coeffs(), &[BigInt::from(2), BigInt::one()]);
        let z = ScaledCyclotomic::new(CyclotomicInteger::zero(6).unwrap(), 7);
        assert_eq!(z.log2_denom(), 0);
        assert!(z.is_zero());
    }

    #[test]
    fn scaled_arithmetic_matches_floats() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = ScaledCyclotomic::new(random_element(12, &mut rng), rng.gen_range(0..4));
            let b = ScaledCyclotomic::new(random_element(12, &mut rng), rng.gen_range(0..4));
            let sum = a.add(&b);
            let prod = a.mul(&b);
            assert!((sum.to_float() - (a.to_float() + b.to_float())).abs() < 1e-6);
            let (ar, ai) = a.to_complex();
            let (br, bi) = b.to_complex();
            let (pr, _) = prod.to_complex();
            assert!((pr - (ar * br - ai * bi)).abs() < 1e-4);
        }
    }
}
