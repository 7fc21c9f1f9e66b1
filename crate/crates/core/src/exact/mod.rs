//! Exact arithmetic: sparse integer polynomials, dyadic rationals, and the
//! ring of cyclotomic integers `Z[zeta_N]` in which sums of cosines of
//! rational multiples of pi are represented without rounding.

mod cyclotomic;
mod dyadic;
mod intpoly;

pub use cyclotomic::{
    cos_pi_rational, cyclotomic_polynomial, order_data, sin_pi_rational, CyclotomicInteger,
    OrderData, ScaledCyclotomic, MAX_ORDER,
};
pub use dyadic::DyadicRational;
pub use intpoly::{BivariatePolynomial, IntPolynomial};

/// Big rational numbers; re-exported so downstream code names one type.
pub type Rational = num_rational::BigRational;
