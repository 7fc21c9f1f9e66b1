//! Sparse polynomials with big-integer coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// A univariate polynomial over `Z`, stored sparsely by degree.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: BTreeMap<u64, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u64, BigInt)>>(coeffs: I) -> Self {
        let mut p = IntPolynomial::zero();
        for (d, c) in coeffs {
            p.add_to_coeff(d, &c);
        }
        p
    }

    /// Builds from dense coefficients, `dense[d]` being the degree-d term.
    pub fn from_dense(dense: &[BigInt]) -> Self {
        Self::from_coeffs(
            dense
                .iter()
                .enumerate()
                .map(|(d, c)| (d as u64, c.clone())),
        )
    }

    pub fn monomial(degree: u64, coeff: BigInt) -> Self {
        Self::from_coeffs([(degree, coeff)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest nonzero term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u64) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn set_coeff(&mut self, degree: u64, coeff: BigInt) {
        if coeff.is_zero() {
            self.coeffs.remove(&degree);
        } else {
            self.coeffs.insert(degree, coeff);
        }
    }

    pub fn add_to_coeff(&mut self, degree: u64, delta: &BigInt) {
        if delta.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *slot += delta;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    /// Terms in increasing degree order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        // Horner over the sparse terms, highest degree first.
        let mut acc = BigInt::zero();
        let mut last_deg: Option<u64> = None;
        for (&d, c) in self.coeffs.iter().rev() {
            if let Some(prev) = last_deg {
                acc *= pow_big(x, prev - d);
            }
            acc += c;
            last_deg = Some(d);
        }
        if let Some(d) = last_deg {
            acc *= pow_big(x, d);
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut last_deg: Option<u64> = None;
        for (&d, c) in self.coeffs.iter().rev() {
            if let Some(prev) = last_deg {
                acc *= pow_rational(x, prev - d);
            }
            acc += Rational::from_integer(c.clone());
            last_deg = Some(d);
        }
        if let Some(d) = last_deg {
            acc *= pow_rational(x, d);
        }
        acc
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (d, c) in other.iter() {
            out.add_to_coeff(d, c);
        }
        out
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (da, ca) in self.iter() {
            for (db, cb) in other.iter() {
                out.add_to_coeff(da + db, &(ca * cb));
            }
        }
        out
    }

    /// Dense coefficient vector of length `degree + 1` (empty when zero).
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => {
                let mut dense = vec![BigInt::zero(); d as usize + 1];
                for (deg, c) in self.iter() {
                    dense[deg as usize] = c.clone();
                }
                dense
            }
        }
    }
}

fn pow_big(x: &BigInt, e: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

fn pow_rational(x: &Rational, e: u64) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl std::fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})t^{d}")?;
        }
        Ok(())
    }
}

/// A polynomial in two variables `z, w` over `Z`, stored sparsely.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(u64, u64), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    pub fn add_to_coeff(&mut self, dz: u64, dw: u64, delta: &BigInt) {
        if delta.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((dz, dw)).or_insert_with(BigInt::zero);
        *slot += delta;
        if slot.is_zero() {
            self.coeffs.remove(&(dz, dw));
        }
    }

    pub fn coeff(&self, dz: u64, dw: u64) -> BigInt {
        self.coeffs
            .get(&(dz, dw))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// Largest `dz + dw` over nonzero terms; `None` when zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.coeffs.keys().map(|&(a, b)| a + b).max()
    }

    pub fn eval_int(&self, z: &BigInt, w: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(dz, dw), c) in &self.coeffs {
            acc += c * pow_big(z, dz) * pow_big(w, dw);
        }
        acc
    }

    /// The univariate polynomial in `w` obtained by fixing `z`.
    pub fn eval_z(&self, z: &BigInt) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (&(dz, dw), c) in &self.coeffs {
            out.add_to_coeff(dw, &(c * pow_big(z, dz)));
        }
        out
    }
}

impl std::fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((dz, dw), c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})z^{dz}w^{dw}")?;
        }
        Ok(())
    }
}
