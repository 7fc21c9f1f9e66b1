//! The one-shot verification suite behind `verify-all`.
//!
//! Each item re-derives one family of frozen results from scratch and
//! compares against an independent oracle or a hand-checked value: the
//! brute-force census against the formula evaluators, the fast polynomial
//! builders against their naive twins, the probability identities against
//! the census, and the guard rails (divisibility, budgets, determinism)
//! against their documented behavior.  Desk level finishes in seconds;
//! extended adds the seven-vertex assignment polynomial and the
//! five-vertex pair-sum identities, which cost real time but nothing new
//! conceptually.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use ramsey_formulas::combinatorics::{count_ramsey_graphs, divisibility_check, Graph};
use ramsey_formulas::exact::Rational;
use ramsey_formulas::pnk::{
    count_homogeneous_subsets, count_homogeneous_subsets_by_sieve, edge_assignment_polynomial,
    edge_assignment_polynomial_naive, involution_check, ramsey_probability_from_assignment,
    vanishing_degree_bound,
};
use ramsey_formulas::qnk::{
    parity_polynomial, parity_polynomial_naive, ramsey_probability_via_parity, ParitySystem,
};
use ramsey_formulas::trig::{
    compute_bivariate, eval_general_incidence, eval_general_mult, eval_restricted_mult,
    sin_product_sum,
};
use ramsey_formulas::{Budget, Error, WorkerPool};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Desk,
    Extended,
}

pub struct Criterion {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

struct Suite {
    budget_override: Option<Budget>,
    pool: WorkerPool,
    seed: u64,
    level: Level,
    items: Vec<Criterion>,
}

impl Suite {
    fn budget(&self, default: Budget) -> Budget {
        self.budget_override.unwrap_or(default)
    }

    fn record(&mut self, name: &'static str, outcome: Result<String, String>) {
        let (passed, details) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.items.push(Criterion {
            name,
            passed,
            details,
        });
    }
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(format!("failed: {what}"))
    }
}

/// Runs the suite and returns one entry per criterion.
pub fn run_suite(
    level: Level,
    budget_override: Option<Budget>,
    pool: WorkerPool,
    seed: u64,
) -> Vec<Criterion> {
    let mut s = Suite {
        budget_override,
        pool,
        seed,
        level,
        items: Vec::new(),
    };
    census(&mut s);
    mult_threshold(&mut s);
    pair_identity(&mut s);
    sin_values(&mut s);
    assignment_polynomial(&mut s);
    kernel_polynomial(&mut s);
    probability_triple(&mut s);
    homogeneous_census(&mut s);
    complement_involution(&mut s);
    divisibility_guard(&mut s);
    bivariate_distribution(&mut s);
    thread_determinism(&mut s);
    s.items
}

fn census(s: &mut Suite) {
    let budget = s.budget(Budget::count_default());
    let outcome = (|| {
        let mut counts = Vec::new();
        for (n, expect) in [(5u32, 12u64), (6, 0), (7, 0)] {
            let got = count_ramsey_graphs(n, 3, budget, &s.pool).map_err(|e| e.to_string())?;
            check(got == expect, &format!("count({n},3) = {got}, want {expect}"))?;
            counts.push(got);
        }
        Ok(format!(
            "exhaustive counts at n = 5, 6, 7: {}, {}, {}",
            counts[0], counts[1], counts[2]
        ))
    })();
    s.record("ramsey-census", outcome);
}

fn canonical_q() -> Rational {
    Rational::new(BigInt::from(-1), BigInt::from(2))
}

fn mult_threshold(s: &mut Suite) {
    let budget = s.budget(Budget::trig_default());
    let outcome = (|| {
        for n in 3u32..=6 {
            let r = eval_general_mult(n, 3, &canonical_q(), 1, budget, &s.pool)
                .map_err(|e| e.to_string())?;
            check(r.certified, &format!("n={n} evaluation not certified"))?;
            let want_zero = n == 6;
            check(
                r.is_zero == want_zero,
                &format!("family sum at n={n}: is_zero = {}", r.is_zero),
            )?;
        }
        Ok("family sum at q = -1/2, m = 1: nonzero for n = 3, 4, 5 and \
            certified zero at n = 6"
            .into())
    })();
    s.record("family-sum-threshold", outcome);
}

fn pair_identity(s: &mut Suite) {
    let budget = s.budget(Budget::trig_default());
    let sizes: &[u32] = match s.level {
        Level::Desk => &[4],
        Level::Extended => &[4, 5],
    };
    let outcome = (|| {
        let pairs = [
            (Rational::new(BigInt::from(-1), BigInt::from(2)), 1i64),
            (Rational::new(BigInt::from(1), BigInt::from(3)), 2),
            (Rational::zero(), 1),
        ];
        let mut checked = 0;
        for &n in sizes {
            let edges = (n * (n - 1) / 2) as usize;
            for (q, m) in &pairs {
                let family =
                    eval_general_mult(n, 3, q, *m, budget, &s.pool).map_err(|e| e.to_string())?;
                let pair = eval_general_incidence(n, 3, q, *m, budget, &s.pool)
                    .map_err(|e| e.to_string())?;
                let scaled = family
                    .exact_value()
                    .ok_or("family sum not exact")?
                    .scale_int(&BigInt::from(1i64 << edges));
                let rhs = pair.exact_value().ok_or("pair sum not exact")?;
                let equal = scaled.eq_value(rhs).map_err(|e| e.to_string())?;
                check(equal, &format!("identity at n={n}, q={q}, m={m}"))?;
                checked += 1;
            }
        }
        Ok(format!(
            "pair sum equals 2^C(n,2) times the family sum in {checked} instances"
        ))
    })();
    s.record("pair-vs-family-identity", outcome);
}

fn sin_values(s: &mut Suite) {
    let budget = s.budget(Budget::trig_default());
    let outcome = (|| {
        let five = sin_product_sum(5, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        let value = five
            .exact_value()
            .and_then(|v| v.as_rational())
            .ok_or("value at (5,3) is not rational")?;
        let expect = Rational::new(BigInt::from(729), BigInt::from(256));
        check(value == expect, &format!("sum at (5,3) = {value}"))?;
        let six = sin_product_sum(6, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        check(six.is_zero && six.certified, "sum at (6,3) not a certified zero")?;
        Ok("sine products: 729/256 at (5,3), certified zero at (6,3)".into())
    })();
    s.record("sin-product-values", outcome);
}

fn assignment_polynomial(s: &mut Suite) {
    let budget = s.budget(Budget::count_default());
    let max_n = match s.level {
        Level::Desk => 6,
        Level::Extended => 7,
    };
    let outcome = (|| {
        let fast = edge_assignment_polynomial(4, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        let naive = edge_assignment_polynomial_naive(4, 3).map_err(|e| e.to_string())?;
        check(fast == naive, "transform and naive walk differ at (4,3)")?;
        let prob =
            ramsey_probability_from_assignment(5, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        let expect = Rational::new(BigInt::from(3), BigInt::from(256));
        check(prob == expect, &format!("probability at (5,3) = {prob}"))?;
        for n in [6u32, 7].into_iter().filter(|&n| n <= max_n) {
            let p = edge_assignment_polynomial(n, 3, budget, &s.pool).map_err(|e| e.to_string())?;
            check(p.is_zero(), &format!("polynomial at ({n},3) is not zero"))?;
        }
        for n in 3..=max_n {
            let p = edge_assignment_polynomial(n, 3, budget, &s.pool).map_err(|e| e.to_string())?;
            let bound = vanishing_degree_bound(n, 3);
            for m in 0..bound {
                check(
                    p.coeff(m) == BigInt::zero(),
                    &format!("low-degree coefficient t^{m} at n={n}"),
                )?;
            }
            if let Some(d) = p.degree() {
                let edges = (n * (n - 1) / 2) as u64;
                check(d <= edges, &format!("degree {d} beyond edge count at n={n}"))?;
            }
        }
        Ok(format!(
            "assignment polynomials match the naive walk, hit 3/256 at \
             (5,3), vanish from n = 6, and obey the degree window up to n = {max_n}"
        ))
    })();
    s.record("assignment-polynomial", outcome);
}

fn kernel_polynomial(s: &mut Suite) {
    let budget = s.budget(Budget::walk_default());
    let outcome = (|| {
        let walk = parity_polynomial(4, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        let naive = parity_polynomial_naive(4, 3).map_err(|e| e.to_string())?;
        check(walk == naive, "kernel walk and naive enumeration differ at (4,3)")?;
        let tau = BigInt::from(-3);
        let q5 = parity_polynomial(5, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        check(
            q5.eval_int(&tau) == BigInt::from(12288),
            &format!("value at tau for (5,3) = {}", q5.eval_int(&tau)),
        )?;
        let q6 = parity_polynomial(6, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        check(
            q6.eval_int(&tau) == BigInt::zero(),
            "value at tau for (6,3) is not zero",
        )?;
        for (n, q) in [(4u32, &walk), (5, &q5), (6, &q6)] {
            let sys = ParitySystem::new(n, 3).map_err(|e| e.to_string())?;
            let cols = sys.num_columns() as u64;
            check(q.degree() == Some(cols), &format!("degree at ({n},3)"))?;
            check(q.coeff(cols) == BigInt::one(), &format!("leading coefficient at ({n},3)"))?;
            check(
                q.iter().all(|(_, c)| c > &BigInt::zero()),
                &format!("negative coefficient at ({n},3)"),
            )?;
            check(
                q.eval_int(&BigInt::one()) == BigInt::one() << sys.nullity(),
                &format!("kernel size mismatch at ({n},3)"),
            )?;
        }
        Ok("kernel polynomials match the naive enumeration, take values \
            12288 and 0 at tau = -3, and have the right shape at n = 4, 5, 6"
            .into())
    })();
    s.record("kernel-polynomial", outcome);
}

fn probability_triple(s: &mut Suite) {
    let outcome = (|| {
        for n in [4u32, 5, 6] {
            let count = count_ramsey_graphs(n, 3, s.budget(Budget::count_default()), &s.pool)
                .map_err(|e| e.to_string())?;
            let edges = (n * (n - 1) / 2) as usize;
            let census = Rational::new(BigInt::from(count), BigInt::one() << edges);
            let via_p =
                ramsey_probability_from_assignment(n, 3, s.budget(Budget::count_default()), &s.pool)
                    .map_err(|e| e.to_string())?;
            let via_q =
                ramsey_probability_via_parity(n, 3, s.budget(Budget::walk_default()), &s.pool)
                    .map_err(|e| e.to_string())?;
            check(census == via_p, &format!("census vs assignment at n={n}"))?;
            check(census == via_q, &format!("census vs kernel at n={n}"))?;
        }
        Ok("census, assignment, and kernel probabilities agree at n = 4, 5, 6".into())
    })();
    s.record("probability-triple", outcome);
}

fn homogeneous_census(s: &mut Suite) {
    let outcome = (|| {
        let k5 = Graph::complete(5);
        check(
            count_homogeneous_subsets(&k5, 3).map_err(|e| e.to_string())? == 10,
            "complete graph on five vertices",
        )?;
        check(
            count_homogeneous_subsets_by_sieve(&k5, 3).map_err(|e| e.to_string())? == 10,
            "sieve on the complete graph",
        )?;
        let c5 = Graph::cycle(5);
        check(
            count_homogeneous_subsets(&c5, 3).map_err(|e| e.to_string())? == 0,
            "five-cycle direct count",
        )?;
        check(
            count_homogeneous_subsets_by_sieve(&c5, 3).map_err(|e| e.to_string())? == 0,
            "sieve on the five-cycle",
        )?;
        let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
        let mut checked = 0;
        for n in [5u32, 6, 7] {
            for _ in 0..100 {
                let g = Graph::random(n, &mut rng);
                let direct = count_homogeneous_subsets(&g, 3).map_err(|e| e.to_string())?;
                let sieve = count_homogeneous_subsets_by_sieve(&g, 3).map_err(|e| e.to_string())?;
                check(
                    sieve == direct as i64,
                    &format!("sieve mismatch on a random graph with n={n}"),
                )?;
                checked += 1;
            }
        }
        Ok(format!(
            "sieve equals the direct count on K5, C5, and {checked} seeded random graphs"
        ))
    })();
    s.record("homogeneous-census", outcome);
}

fn complement_involution(s: &mut Suite) {
    let outcome = (|| {
        let odd = involution_check(7, 3, 1000, s.seed).map_err(|e| e.to_string())?;
        check(odd.samples == 1000, "short sample at (7,3)")?;
        check(odd.closed_under_complement, "(7,3) domain not closed")?;
        check(odd.involutive, "(7,3) complement not involutive")?;
        check(odd.all_signs_reversed, "(7,3) complement kept a sign")?;
        let even = involution_check(5, 3, 1000, s.seed).map_err(|e| e.to_string())?;
        check(even.closed_under_complement, "(5,3) domain not closed")?;
        check(even.involutive, "(5,3) complement not involutive")?;
        check(
            even.all_signs_preserved,
            "(5,3) complement flipped a sign despite the even grid",
        )?;
        Ok("complement reverses all 1000 sampled signs on the odd grid at \
            (7,3) and preserves them on the even grid at (5,3)"
            .into())
    })();
    s.record("complement-involution", outcome);
}

fn divisibility_guard(s: &mut Suite) {
    let outcome = (|| {
        for (n, k, want) in [
            (43u32, 5u32, true),
            (44, 5, true),
            (48, 5, true),
            (6, 3, false),
            (45, 5, false),
        ] {
            let report = divisibility_check(n, k).map_err(|e| e.to_string())?;
            check(
                report.divisible == want,
                &format!("divisibility at ({n},{k}) = {}", report.divisible),
            )?;
        }
        match eval_restricted_mult(45, 5, s.budget(Budget::trig_default()), &s.pool) {
            Err(Error::DivisibilityHypothesis { n: 45, k: 5 }) => {}
            other => {
                return Err(format!(
                    "restricted sum at (45,5) should fail the hypothesis, got {other:?}"
                ))
            }
        }
        match eval_restricted_mult(43, 5, s.budget(Budget::trig_default()), &s.pool) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => {
                return Err(format!(
                    "restricted sum at (43,5) should exceed the budget, got {other:?}"
                ))
            }
        }
        Ok("quotient exists at (43,5), (44,5), (48,5) and fails at (6,3), \
            (45,5); the restricted sums refuse accordingly"
            .into())
    })();
    s.record("divisibility-guard", outcome);
}

fn bivariate_distribution(s: &mut Suite) {
    let budget = s.budget(Budget::trig_default());
    let outcome = (|| {
        let b = compute_bivariate(4, 3, budget, &s.pool).map_err(|e| e.to_string())?;
        check(
            b.eval_int(&BigInt::one(), &BigInt::one()) == BigInt::from(1024),
            "total mass is not 2^10",
        )?;
        let at_zero = b.eval_z(&BigInt::zero());
        check(
            at_zero.degree() == Some(0) && at_zero.coeff(0) == BigInt::from(64),
            "empty-family slice is not the graph count",
        )?;
        check(b.total_degree() == Some(16), "total degree is not 16")?;
        Ok("pair distribution at (4,3): mass 1024, empty-family slice 64, \
            total degree 16"
            .into())
    })();
    s.record("pair-distribution", outcome);
}

fn thread_determinism(s: &mut Suite) {
    let outcome = (|| {
        let solo = WorkerPool::new(1);
        let wide = WorkerPool::new(8);
        let a = eval_general_mult(5, 3, &canonical_q(), 1, s.budget(Budget::trig_default()), &solo)
            .map_err(|e| e.to_string())?;
        let b = eval_general_mult(5, 3, &canonical_q(), 1, s.budget(Budget::trig_default()), &wide)
            .map_err(|e| e.to_string())?;
        let (Some(av), Some(bv)) = (a.exact_value(), b.exact_value()) else {
            return Err("family sum did not run exact".into());
        };
        check(av == bv, "family sum differs between 1 and 8 threads")?;
        let p1 = edge_assignment_polynomial(6, 3, s.budget(Budget::count_default()), &solo)
            .map_err(|e| e.to_string())?;
        let p8 = edge_assignment_polynomial(6, 3, s.budget(Budget::count_default()), &wide)
            .map_err(|e| e.to_string())?;
        check(p1 == p8, "assignment polynomial differs between 1 and 8 threads")?;
        let q1 = parity_polynomial(5, 3, s.budget(Budget::walk_default()), &solo)
            .map_err(|e| e.to_string())?;
        let q8 = parity_polynomial(5, 3, s.budget(Budget::walk_default()), &wide)
            .map_err(|e| e.to_string())?;
        check(q1 == q8, "kernel polynomial differs between 1 and 8 threads")?;
        let c1 = count_ramsey_graphs(6, 3, s.budget(Budget::count_default()), &solo)
            .map_err(|e| e.to_string())?;
        let c8 = count_ramsey_graphs(6, 3, s.budget(Budget::count_default()), &wide)
            .map_err(|e| e.to_string())?;
        check(c1 == c8, "census differs between 1 and 8 threads")?;
        Ok("representative sums, polynomials, and counts are identical at \
            1 and 8 threads"
            .into())
    })();
    s.record("thread-determinism", outcome);
}
