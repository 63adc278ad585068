mod common;

use bernstir::rstirling::{rstir_enum_oracle, rstir_gf_oracle, EnumerationCounts, ENUMERATION_BUDGET};
use bernstir::{rstir, StirlingKind, StirlingTable};
use num_bigint::BigUint;
use proptest::prelude::*;

fn reference(kind: StirlingKind, n: usize, k: usize, r: usize) -> BigUint {
    match kind {
        StirlingKind::FirstKindUnsigned => common::first_kind(n, k, r),
        StirlingKind::SecondKind => common::second_kind(n, k, r),
    }
}

fn kind() -> impl Strategy<Value = StirlingKind> {
    prop_oneof![Just(StirlingKind::FirstKindUnsigned), Just(StirlingKind::SecondKind)]
}

#[test]
fn recurrence_matches_closed_forms_to_n_25() {
    for kind in StirlingKind::ALL {
        for r in 0..=5 {
            let table = StirlingTable::new(kind, r, 25);
            for n in 0..=25 {
                for k in 0..=n + 1 {
                    let got = table.get(n, k).unwrap_or_default();
                    assert_eq!(got, reference(kind, n, k, r), "{kind} N={n} K={k} r={r}");
                }
            }
        }
    }
}

#[test]
fn known_values() {
    use StirlingKind::*;
    assert_eq!(rstir(SecondKind, 4, 3, 2), BigUint::from(5u32));
    assert_eq!(rstir(FirstKindUnsigned, 3, 2, 1), BigUint::from(3u32));
    assert_eq!(rstir(SecondKind, 2, 2, 2), BigUint::from(1u32));
    assert_eq!(rstir(SecondKind, 10, 3, 0), BigUint::from(9330u32));
    assert_eq!(rstir(FirstKindUnsigned, 10, 3, 0), BigUint::from(1_172_700u32));
}

#[test]
fn row_sums_are_bell_numbers_and_factorials() {
    for n in 0..=20 {
        let bell: BigUint = (0..=n).map(|k| rstir(StirlingKind::SecondKind, n, k, 0)).sum();
        assert_eq!(bell, common::bell(n));
        let perms: BigUint = (0..=n).map(|k| rstir(StirlingKind::FirstKindUnsigned, n, k, 0)).sum();
        assert_eq!(perms, common::fact(n).to_biguint().unwrap());
    }
}

#[test]
fn enumeration_counts_every_object_once() {
    for kind in StirlingKind::ALL {
        for n in 0..=8 {
            let counts = EnumerationCounts::compute(kind, n).unwrap();
            let total: u64 = (0..=n).map(|k| counts.count(k, 0)).sum();
            assert_eq!(total, counts.total());
        }
    }
    assert!(rstir_enum_oracle(StirlingKind::SecondKind, ENUMERATION_BUDGET + 1, 1, 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_routes_agree(kind in kind(), n in 0usize..=8, k in 0usize..=8, r in 0usize..=4) {
        prop_assume!(r <= n);
        let rec = rstir(kind, n, k, r);
        prop_assert_eq!(rstir_enum_oracle(kind, n, k, r).unwrap(), rec.clone());
        if n >= r && k >= r {
            prop_assert_eq!(rstir_gf_oracle(kind, n - r, k - r, r).unwrap(), rec);
        }
    }

    #[test]
    fn r_one_is_ordinary(kind in kind(), n in 1usize..=30, k in 1usize..=30) {
        prop_assert_eq!(rstir(kind, n, k, 1), rstir(kind, n, k, 0));
    }

    #[test]
    fn vanishes_outside_triangle(kind in kind(), n in 0usize..=20, k in 0usize..=25, r in 0usize..=6) {
        if k > n || k < r || n < r {
            prop_assert_eq!(rstir(kind, n, k, r), BigUint::default());
        }
    }

    #[test]
    fn diagonal_is_one(kind in kind(), n in 0usize..=30, r in 0usize..=30) {
        prop_assume!(r <= n);
        prop_assert_eq!(rstir(kind, n, n, r), BigUint::from(1u32));
    }
}
