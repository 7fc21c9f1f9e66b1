//! Exact evaluators for combinatorial formulas that detect the diagonal
//! Ramsey property.
//!
//! A graph on `n` labeled vertices is *k-Ramsey* if it contains neither a
//! clique nor an independent set on `k` vertices; such graphs exist exactly
//! when `n < R(k)`, the k-th diagonal Ramsey number.  This crate evaluates,
//! in exact arithmetic over cyclotomic integers, several closed-form sums
//! whose vanishing is equivalent to `n >= R(k)`:
//!
//! * signed products of cosines indexed by families of k-subsets
//!   ([`trig::eval_general_mult`], [`trig::eval_restricted_mult`]),
//! * double sums over graph pairs weighted by incidence counts
//!   ([`trig::eval_general_incidence`], [`trig::eval_restricted_incidence`]),
//! * a nonnegative sum of sine products ([`trig::sin_product_sum`]),
//! * the edge-assignment polynomials `P_{n,k}` ([`pnk`]) and `Q_{n,k}`
//!   ([`qnk`]), whose special values encode the probability that a uniform
//!   random graph is k-Ramsey.
//!
//! Everything is computed exactly: sums of cosines of rational multiples of
//! pi live in `Z[zeta_N]` scaled by a power of two, polynomial coefficients
//! are big integers, and probabilities are big rationals.  A zero decision
//! is therefore a certificate, not a numerical judgment.  A compensated
//! floating-point mode exists for quick non-certifying scans.
//!
//! Brute-force oracles (`combinatorics::count_ramsey_graphs`, naive variants
//! of the polynomial builders) cross-validate the formula evaluators at
//! small sizes.  All enumerations are guarded by an explicit [`Budget`].

pub mod bits;
pub mod budget;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod exec;
pub mod pnk;
pub mod qnk;
pub mod trig;

pub use budget::Budget;
pub use error::{Error, Result};
pub use exec::WorkerPool;
