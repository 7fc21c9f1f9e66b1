//! End-to-end acceptance checks, one test per release criterion.
//!
//! Each test restates a frozen desk-scale fact and derives it from
//! scratch through the public library or the installed binary, so the
//! harness output reads as a one-line pass/fail checklist.

use std::process::Command;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

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
    compute_bivariate, eval_general_incidence, eval_general_mult, sin_product_sum,
};
use ramsey_formulas::{Budget, WorkerPool};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pool() -> WorkerPool {
    WorkerPool::new(4)
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn run_binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("binary exits"),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
    )
}

#[test]
fn c01_census_knows_the_three_color_ramsey_threshold() {
    let pool = pool();
    let budget = Budget::count_default();
    assert_eq!(count_ramsey_graphs(5, 3, budget, &pool).unwrap(), 12);
    assert_eq!(count_ramsey_graphs(6, 3, budget, &pool).unwrap(), 0);
    assert_eq!(count_ramsey_graphs(7, 3, budget, &pool).unwrap(), 0);
}

#[test]
fn c02_family_sum_vanishes_first_at_six_vertices() {
    let pool = pool();
    let budget = Budget::trig_default();
    let q = rat(-1, 2);
    for n in 3..=6 {
        let r = eval_general_mult(n, 3, &q, 1, budget, &pool).unwrap();
        assert!(r.certified, "n={n} not certified");
        assert_eq!(r.is_zero, n == 6, "n={n} zero status wrong");
    }
}

#[test]
fn c03_pair_sum_is_the_family_sum_scaled_by_graph_count() {
    let pool = pool();
    let budget = Budget::trig_default();
    let instances = [(rat(-1, 2), 1i64), (rat(1, 3), 2), (rat(0, 1), 1)];
    for n in [4u32, 5] {
        let edges = n * (n - 1) / 2;
        for (q, m) in &instances {
            let family = eval_general_mult(n, 3, q, *m, budget, &pool).unwrap();
            let pair = eval_general_incidence(n, 3, q, *m, budget, &pool).unwrap();
            let scaled = family
                .exact_value()
                .unwrap()
                .scale_int(&(BigInt::one() << edges));
            assert!(
                scaled.eq_value(pair.exact_value().unwrap()).unwrap(),
                "identity fails at n={n}, q={q}, m={m}"
            );
        }
    }
}

#[test]
fn c04_sine_product_sum_matches_the_census_boundary() {
    let pool = pool();
    let budget = Budget::trig_default();
    let five = sin_product_sum(5, 3, budget, &pool).unwrap();
    assert_eq!(
        five.exact_value().unwrap().as_rational().unwrap(),
        rat(729, 256)
    );
    let six = sin_product_sum(6, 3, budget, &pool).unwrap();
    assert!(six.is_zero && six.certified);
}

#[test]
fn c05_assignment_polynomial_matches_reference_and_vanishes_from_six() {
    let pool = pool();
    let budget = Budget::count_default();
    let fast = edge_assignment_polynomial(4, 3, budget, &pool).unwrap();
    assert_eq!(fast, edge_assignment_polynomial_naive(4, 3).unwrap());
    assert_eq!(
        ramsey_probability_from_assignment(5, 3, budget, &pool).unwrap(),
        rat(3, 256)
    );
    assert!(edge_assignment_polynomial(6, 3, budget, &pool).unwrap().is_zero());
    assert!(edge_assignment_polynomial(7, 3, budget, &pool).unwrap().is_zero());
    for n in 3..=7 {
        let p = edge_assignment_polynomial(n, 3, budget, &pool).unwrap();
        let bound = vanishing_degree_bound(n, 3);
        let edges = u64::from(n * (n - 1) / 2);
        for (d, c) in p.iter() {
            assert!(!c.is_zero());
            assert!(d >= bound, "n={n}: nonzero coefficient below degree {bound}");
            assert!(d <= edges, "n={n}: degree above edge count");
        }
    }
}

#[test]
fn c06_kernel_polynomial_matches_reference_and_has_the_stated_shape() {
    let pool = pool();
    let budget = Budget::walk_default();
    let walk = parity_polynomial(4, 3, budget, &pool).unwrap();
    assert_eq!(walk, parity_polynomial_naive(4, 3).unwrap());
    let tau = BigInt::from(-3);
    assert_eq!(
        parity_polynomial(5, 3, budget, &pool).unwrap().eval_int(&tau),
        BigInt::from(12288)
    );
    assert!(parity_polynomial(6, 3, budget, &pool)
        .unwrap()
        .eval_int(&tau)
        .is_zero());
    for n in [4u32, 5, 6] {
        let q = parity_polynomial(n, 3, budget, &pool).unwrap();
        let sys = ParitySystem::new(n, 3).unwrap();
        let cols = u64::try_from(sys.num_columns()).unwrap();
        assert_eq!(
            q.eval_int(&BigInt::one()),
            BigInt::one() << sys.nullity(),
            "n={n}: value at 1 is not 2^kernel-dimension"
        );
        assert_eq!(q.degree(), Some(cols), "n={n}: degree is not C(n,3)");
        assert!(q.coeff(cols).is_one(), "n={n}: leading coefficient not 1");
        assert!(
            q.iter().all(|(_, c)| c > &BigInt::zero()),
            "n={n}: negative coefficient"
        );
    }
}

#[test]
fn c07_three_probability_routes_agree() {
    let pool = pool();
    for n in [4u32, 5, 6] {
        let edges = n * (n - 1) / 2;
        let count = count_ramsey_graphs(n, 3, Budget::count_default(), &pool).unwrap();
        let census = Rational::new(BigInt::from(count), BigInt::one() << edges);
        let via_p =
            ramsey_probability_from_assignment(n, 3, Budget::count_default(), &pool).unwrap();
        let via_q = ramsey_probability_via_parity(n, 3, Budget::walk_default(), &pool).unwrap();
        assert_eq!(census, via_p, "n={n}: census vs assignment route");
        assert_eq!(census, via_q, "n={n}: census vs kernel route");
    }
}

#[test]
fn c08_homogeneous_sieve_agrees_with_direct_counting() {
    assert_eq!(count_homogeneous_subsets(&Graph::complete(5), 3).unwrap(), 10);
    assert_eq!(
        count_homogeneous_subsets_by_sieve(&Graph::complete(5), 3).unwrap(),
        10
    );
    assert_eq!(count_homogeneous_subsets(&Graph::cycle(5), 3).unwrap(), 0);
    assert_eq!(
        count_homogeneous_subsets_by_sieve(&Graph::cycle(5), 3).unwrap(),
        0
    );
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    for n in [5u32, 6, 7] {
        for _ in 0..100 {
            let g = Graph::random(n, &mut rng);
            let direct = count_homogeneous_subsets(&g, 3).unwrap();
            let sieve = count_homogeneous_subsets_by_sieve(&g, 3).unwrap();
            assert_eq!(sieve, i64::try_from(direct).unwrap(), "n={n}");
        }
    }
}

#[test]
fn c09_complement_reverses_sign_exactly_when_the_grid_is_odd() {
    let seven = involution_check(7, 3, 1000, 1729).unwrap();
    assert_eq!(seven.samples, 1000);
    assert!(seven.closed_under_complement);
    assert!(seven.involutive);
    assert!(seven.all_signs_reversed);
    assert!(!seven.all_signs_preserved);

    let five = involution_check(5, 3, 1000, 1729).unwrap();
    assert!(five.closed_under_complement);
    assert!(five.involutive);
    assert!(!five.all_signs_reversed);
    assert!(five.all_signs_preserved);
}

#[test]
fn c10_divisibility_gate_admits_and_refuses_the_right_inputs() {
    for (n, k) in [(43u32, 5u32), (44, 5), (48, 5)] {
        let r = divisibility_check(n, k).unwrap();
        assert!(r.divisible, "({n},{k}) should divide");
        assert!(r.quotient.is_some());
    }
    for (n, k) in [(6u32, 3u32), (45, 5)] {
        let r = divisibility_check(n, k).unwrap();
        assert!(!r.divisible, "({n},{k}) should not divide");
        assert!(r.quotient.is_none());
    }
    let (code, _) = run_binary(&["thm21", "--n", "6", "--k", "3"]);
    assert_eq!(code, 2, "thm21 must refuse a non-divisible input");
    let (code, _) = run_binary(&["thm22", "--n", "45", "--k", "5"]);
    assert_eq!(code, 2, "thm22 must refuse a non-divisible input");
    let (code, _) = run_binary(&["thm21", "--n", "43", "--k", "5"]);
    assert_eq!(code, 3, "thm21 must refuse an over-budget input");
}

#[test]
fn c11_pair_distribution_at_four_vertices() {
    let pool = pool();
    let b = compute_bivariate(4, 3, Budget::trig_default(), &pool).unwrap();
    assert_eq!(
        b.eval_int(&BigInt::one(), &BigInt::one()),
        BigInt::from(1024)
    );
    let at_zero = b.eval_z(&BigInt::zero());
    assert_eq!(at_zero.degree(), Some(0));
    assert_eq!(at_zero.coeff(0), BigInt::from(64));
    assert_eq!(b.total_degree(), Some(16));
}

#[test]
fn c12_verification_suite_is_thread_count_invariant() {
    let (code_one, out_one) = run_binary(&["verify-all", "--threads", "1"]);
    let one: Value = serde_json::from_str(&out_one).expect("json from one thread");
    assert_eq!(code_one, 0);
    assert_eq!(one["result"]["all_passed"], Value::Bool(true));
    let bytes = |v: &Value| serde_json::to_vec(&v["result"]).unwrap();
    for threads in ["4", "8"] {
        let (code, out) = run_binary(&["verify-all", "--threads", threads]);
        assert_eq!(code, 0);
        let other: Value = serde_json::from_str(&out).expect("json");
        assert_eq!(
            bytes(&one),
            bytes(&other),
            "results differ between 1 and {threads} threads"
        );
    }
}
