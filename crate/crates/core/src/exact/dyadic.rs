//! Rationals whose denominator is a power of two.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;

/// `num / 2^log2_denom`, kept normalized: `num` is odd unless the value is
/// an integer multiple of the unit, and zero is stored as `0 / 2^0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyadicRational {
    num: BigInt,
    log2_denom: u32,
}

impl DyadicRational {
    pub fn new(num: BigInt, log2_denom: u32) -> Self {
        let mut d = DyadicRational { num, log2_denom };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        DyadicRational {
            num: BigInt::zero(),
            log2_denom: 0,
        }
    }

    pub fn from_integer(num: BigInt) -> Self {
        DyadicRational { num, log2_denom: 0 }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.log2_denom = 0;
            return;
        }
        while self.log2_denom > 0 && self.num.is_even() {
            self.num >>= 1;
            self.log2_denom -= 1;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn log2_denom(&self) -> u32 {
        self.log2_denom
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.num.clone(), BigInt::from(1) << self.log2_denom)
    }

    pub fn to_float(&self) -> f64 {
        // Exact for small values; large ones degrade like any f64.
        self.num.to_f64().unwrap_or(if self.num.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }) / (self.log2_denom as f64).exp2()
    }

    pub fn add(&self, other: &DyadicRational) -> DyadicRational {
        let s = self.log2_denom.max(other.log2_denom);
        let a = &self.num << (s - self.log2_denom);
        let b = &other.num << (s - other.log2_denom);
        DyadicRational::new(a + b, s)
    }

    pub fn mul(&self, other: &DyadicRational) -> DyadicRational {
        DyadicRational::new(&self.num * &other.num, self.log2_denom + other.log2_denom)
    }

    pub fn neg(&self) -> DyadicRational {
        DyadicRational {
            num: -&self.num,
            log2_denom: self.log2_denom,
        }
    }
}

impl std::fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.log2_denom == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.log2_denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let d = DyadicRational::new(BigInt::from(12), 4);
        assert_eq!(d.numerator(), &BigInt::from(3));
        assert_eq!(d.log2_denom(), 2);
        let z = DyadicRational::new(BigInt::zero(), 9);
        assert_eq!(z, DyadicRational::zero());
        let i = DyadicRational::new(BigInt::from(6), 0);
        assert_eq!(i.log2_denom(), 0);
        assert_eq!(i.numerator(), &BigInt::from(6));
    }

    #[test]
    fn arithmetic_and_conversion() {
        let a = DyadicRational::new(BigInt::from(3), 2); // 3/4
        let b = DyadicRational::new(BigInt::from(1), 1); // 1/2
        let sum = a.add(&b); // 5/4
        assert_eq!(sum.numerator(), &BigInt::from(5));
        assert_eq!(sum.log2_denom(), 2);
        let prod = a.mul(&b); // 3/8
        assert_eq!(prod.numerator(), &BigInt::from(3));
        assert_eq!(prod.log2_denom(), 3);
        assert_eq!(
            sum.to_rational(),
            Rational::new(BigInt::from(5), BigInt::from(4))
        );
        assert_eq!(prod.to_float(), 0.375);
        assert_eq!(a.add(&a.neg()), DyadicRational::zero());
    }
}
