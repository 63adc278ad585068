mod common;

use bernstir::arith::{int, ratio};
use bernstir::bernoulli::{
    self, eval_prop1, eval_prop2, oracle_eval, special_neg_order, BernoulliFamily, EvalSpec,
    Representation,
};
use bernstir::{Error, Rational};
use proptest::prelude::*;

use BernoulliFamily::{FirstKind, SecondKind};

fn family() -> impl Strategy<Value = BernoulliFamily> {
    prop_oneof![Just(FirstKind), Just(SecondKind)]
}

fn alpha() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (1i64..=6).prop_map(int),
        (-9i64..=9, 2i64..=5).prop_map(|(n, d)| ratio(n, d)),
    ]
}

fn closed(family: BernoulliFamily, spec: &EvalSpec) -> Result<Rational, Error> {
    if spec.x < 0 {
        eval_prop1(family, spec)
    } else {
        eval_prop2(family, spec)
    }
}

#[test]
fn oracle_matches_convolution_reference() {
    for n in 0..=8 {
        for m in 1..=4usize {
            for x in -3..=3 {
                assert_eq!(
                    oracle_eval(FirstKind, n, &int(m as i64), x),
                    common::bernoulli_higher(n, m, &common::q(x)),
                    "B_{n}^({m})({x})"
                );
            }
        }
    }
}

#[test]
fn second_kind_numbers_match_integral() {
    for n in 0..=12 {
        assert_eq!(oracle_eval(SecondKind, n, &int(1), 0), common::bernoulli_second_numbers(n), "b_{n}");
        assert_eq!(bernoulli::bernoulli_second_at(n, 0), common::bernoulli_second_numbers(n));
    }
}

#[test]
fn classical_values_at_integers() {
    for n in 0..=12 {
        for m in -4..=4 {
            assert_eq!(bernoulli::bernoulli_first_at(n, m), common::bernoulli_poly(n, &common::q(m)));
        }
    }
}

#[test]
fn representations() {
    for rep in Representation::ALL {
        for n in 1..=12 {
            assert_eq!(rep.eval(n).unwrap(), oracle_eval(rep.family(), n, &int(1), 0), "{rep:?} n={n}");
        }
    }
    assert!(matches!(Representation::FirstKindViaCycles.eval(0), Err(Error::PoleAtSampledPoint { j: 0, .. })));
    assert_eq!(Representation::FirstKindViaPartitions.eval(0).unwrap(), int(1));
    assert_eq!(Representation::SecondKindViaCycles.eval(0).unwrap(), int(1));
}

#[test]
fn negative_orders_are_stirling_data() {
    for f in [FirstKind, SecondKind] {
        for n in 0..=8 {
            for k in 0..=8 {
                for r in 0..=8 {
                    let x = match f {
                        FirstKind => r as i64,
                        SecondKind => -(r as i64),
                    };
                    assert_eq!(special_neg_order(f, n, k, r), oracle_eval(f, n, &int(-(k as i64)), x));
                }
            }
        }
    }
}

#[test]
fn pole_is_reported_not_adjusted() {
    let spec = EvalSpec::new(1, int(-1), -1);
    assert!(matches!(eval_prop1(SecondKind, &spec), Err(Error::PoleAtSampledPoint { j: 1, .. })));
    let spec = spec.with_q(2);
    assert_eq!(eval_prop1(SecondKind, &spec).unwrap(), oracle_eval(SecondKind, 1, &int(-1), -1));
}

#[test]
fn short_sample_is_rejected() {
    let spec = EvalSpec::new(4, int(1), 2).with_p(3);
    assert!(matches!(bernoulli::evaluate(FirstKind, &spec), Err(Error::InvalidParameters(_))));
}

#[test]
fn genocchi_and_euler() {
    let b = common::bernoulli_numbers(12);
    for n in 1..=6 {
        let four = common::pow(&int(4), n);
        let expected = int(2) * (int(1) - four) * &b[2 * n];
        assert_eq!(Rational::from_integer(bernoulli::genocchi(n).unwrap()), expected);
    }
    for m in [0, 2, 4, 6] {
        assert_eq!(bernoulli::euler_at_even(1, m).unwrap(), int(1));
    }
    assert_eq!(bernoulli::euler_at_even(2, 0).unwrap(), ratio(-1, 2));
    assert!(matches!(bernoulli::euler_at_even(2, 3), Err(Error::OddArgument { m: 3 })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_forms_match_oracle(
        f in family(), n in 0usize..=7, a in alpha(), r in 0i64..=3, neg in any::<bool>(),
        extra in 0usize..=3, q in 0usize..=3,
    ) {
        let x = if neg { -r } else { r };
        let spec = EvalSpec::new(n, a.clone(), x).with_p(n + extra).with_q(q);
        match closed(f, &spec) {
            Ok(v) => prop_assert_eq!(v, oracle_eval(f, n, &a, x)),
            Err(Error::PoleAtSampledPoint { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn auto_evaluation_matches_oracle(f in family(), n in 0usize..=7, a in alpha(), x in -4i64..=4) {
        prop_assert_eq!(bernoulli::evaluate_auto(f, n, &a, x), oracle_eval(f, n, &a, x));
    }

    #[test]
    fn negative_integer_orders(f in family(), n in 0usize..=6, k in 0i64..=6, x in -4i64..=4) {
        prop_assert_eq!(bernoulli::evaluate_auto(f, n, &int(-k), x), oracle_eval(f, n, &int(-k), x));
    }

    #[test]
    fn carlitz_duality(n in 0usize..=8, a in alpha(), x in -4i64..=4) {
        let dual = int(n as i64 + 1) - &a;
        prop_assert_eq!(oracle_eval(FirstKind, n, &a, x), oracle_eval(SecondKind, n, &dual, x - 1));
    }

    #[test]
    fn melzak_reproduces_polynomials(coeffs in prop::collection::vec(-5i64..=5, 1..=5), a in alpha(), q in 0usize..=3) {
        let poly = |t: &Rational| coeffs.iter().rev().fold(int(0), |acc, c| acc * t + int(*c));
        let p = coeffs.len() - 1;
        let samples: Vec<Rational> = (0..=p).map(|j| poly(&int(-(j as i64) - q as i64))).collect();
        match bernoulli::melzak_eval(&samples, &a, q) {
            Ok(v) => prop_assert_eq!(v, poly(&a)),
            Err(Error::PoleAtSampledPoint { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }
}
