mod common;

use fracsum::arith::is_prime;
use fracsum::{divisor_sum_identity, eval_point, factorize, sieve_table, ArithFn, Error};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn eval_point_matches_brute_force_oracle() {
    for f in ArithFn::ALL {
        for n in 1..=3000 {
            assert_eq!(eval_point(f, n).unwrap(), common::value(f, n), "{f}({n})");
        }
    }
}

#[test]
fn sieve_and_eval_agree_for_mu_tags() {
    for f in [ArithFn::Mu, ArithFn::MuSquared] {
        let t = sieve_table(f, 20_000).unwrap();
        for n in 1..=20_000 {
            assert_eq!(t.get(n), eval_point(f, n).unwrap());
        }
    }
}

#[test]
fn growth_guards_hold() {
    // sigma(n) < e^γ n ln ln n + 0.6483 n / ln ln n for n ≥ 3 (Robin's unconditional form).
    let sigma = sieve_table(ArithFn::Sigma, 200_000).unwrap();
    let psi = sieve_table(ArithFn::Psi, 200_000).unwrap();
    for n in 100..=200_000u64 {
        let nf = n as f64;
        let ll = nf.ln().ln();
        let bound = 1.7811 * nf * ll + 0.6483 * nf / ll;
        assert!((sigma.get(n) as f64) < bound, "sigma({n})");
        assert!(psi.get(n) <= sigma.get(n));
    }
}

#[test]
fn zero_is_rejected_everywhere() {
    assert!(matches!(
        eval_point(ArithFn::Phi, 0),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(factorize(0), Err(Error::InvalidArgument(_))));
    assert!(matches!(
        divisor_sum_identity(ArithFn::Sigma, 0),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        divisor_sum_identity(ArithFn::Mu, 6),
        Err(Error::InvalidArgument(_))
    ));
    assert!(factorize(1 << 63).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn factorization_reconstructs_n(n in 1u64..(1 << 63)) {
        let f = factorize(n).unwrap();
        let mut product = 1u128;
        let mut last = 1u64;
        for &(p, e) in f.factors() {
            prop_assert!(p > last, "factors sorted and distinct");
            prop_assert!(is_prime(p));
            prop_assert!(e >= 1);
            product *= (p as u128).pow(e);
            last = p;
        }
        prop_assert_eq!(product, n as u128);
    }

    #[test]
    fn multiplicative_on_coprime_pairs(a in 1u64..50_000, b in 1u64..50_000) {
        prop_assume!(gcd(a, b) == 1);
        for f in ArithFn::ALL {
            prop_assert_eq!(
                eval_point(f, a * b).unwrap(),
                eval_point(f, a).unwrap() * eval_point(f, b).unwrap()
            );
        }
    }

    #[test]
    fn pointwise_dominance(n in 1u64..1_000_000_000_000) {
        let phi = eval_point(ArithFn::Phi, n).unwrap();
        let psi = eval_point(ArithFn::Psi, n).unwrap();
        let sigma = eval_point(ArithFn::Sigma, n).unwrap();
        prop_assert!(phi <= psi && psi <= sigma);
        let squarefree = factorize(n).unwrap().is_squarefree();
        prop_assert_eq!(psi == sigma, squarefree);
        prop_assert_eq!(eval_point(ArithFn::MuSquared, n).unwrap(), i64::from(squarefree));
    }

    #[test]
    fn identity_matches_eval(n in 1u64..10_000_000) {
        for f in ArithFn::GROWING {
            prop_assert_eq!(divisor_sum_identity(f, n).unwrap(), eval_point(f, n).unwrap());
        }
    }
}
