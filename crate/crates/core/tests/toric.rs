mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use quiddity_core::formulas::blowup_count;
use quiddity_core::matrixeq::{enumerate_positive_solutions, is_cc_solution};
use quiddity_core::toric::{
    classify_type, dual_contract, enumerate_blowups, expected_type_counts, fan_blow_up,
    fan_from_sequence, negative_blow_up, type_census, FanSequence, FanType,
};

#[test]
fn census_sizes() {
    let expected = [4u64, 15, 49, 168, 594, 2145];
    for (n, &e) in (1..=6).zip(&expected) {
        let fans = enumerate_blowups(n).unwrap();
        assert_eq!(fans.len() as u64, e, "n={n}");
        assert_eq!(BigInt::from(e), blowup_count(n));
    }
    assert_eq!(
        enumerate_blowups(0)
            .unwrap()
            .into_iter()
            .collect::<Vec<_>>(),
        vec![FanSequence::projective_plane()]
    );
}

#[test]
fn type_counts() {
    let cat = common::catalans(10);
    for n in 1..=6 {
        let census = type_census(&enumerate_blowups(n).unwrap()).unwrap();
        let predicted = expected_type_counts(n);
        for t in 0..4 {
            assert_eq!(BigInt::from(census[t]), predicted[t], "n={n} type {t}");
        }
        let big_n = (n + 3) as u128;
        assert_eq!(census[1] as u128, big_n * cat[n]);
        if n >= 2 {
            assert_eq!(census[2] as u128, big_n * cat[n - 1]);
        }
        if n >= 3 {
            assert_eq!(census[3] as u128, big_n * (cat[n] - 2 * cat[n - 1]));
        }
    }
    let one = type_census(&enumerate_blowups(1).unwrap()).unwrap();
    assert_eq!(one, [0, 4, 0, 0]);
    let two = type_census(&enumerate_blowups(2).unwrap()).unwrap();
    assert_eq!(two, [0, 10, 5, 0]);
}

#[test]
fn positive_fans_are_hexagon_quiddities() {
    for n in 3..=6 {
        let fans: BTreeSet<Vec<i64>> = enumerate_blowups(n)
            .unwrap()
            .into_iter()
            .filter(|a| classify_type(a).unwrap() == FanType::A)
            .map(|a| a.values().to_vec())
            .collect();
        let one_hexagon: BTreeSet<Vec<i64>> = enumerate_positive_solutions(n + 3)
            .unwrap()
            .into_iter()
            .filter(|a| is_cc_solution(a).map(|c| c.k) == Some(1))
            .collect();
        assert_eq!(fans, one_hexagon, "n={n}");
    }
}

#[test]
fn every_fan_is_valid() {
    for n in 1..=6 {
        for a in enumerate_blowups(n).unwrap() {
            let class = is_cc_solution(a.values()).unwrap();
            assert_eq!(
                (class.sign, class.total),
                (1, 3 * (n as i64 + 3) - 12),
                "{a}"
            );
            let fan = fan_from_sequence(&a).unwrap();
            assert_eq!(fan.sequence(), a.values(), "{a}");
            assert_eq!(fan.winding_number(), 1);
        }
    }
}

#[test]
fn sequence_and_vector_blow_ups_agree() {
    for a in enumerate_blowups(3).unwrap() {
        let fan = fan_from_sequence(&a).unwrap();
        for k in 1..=a.len() {
            let b = fan_blow_up(&a, k);
            assert_eq!(fan.blow_up(k).sequence(), b.values(), "{a} k={k}");
            assert!(FanSequence::new(b.values().to_vec()).is_ok());
        }
    }
}

#[test]
fn negative_blow_up_inverts_contraction() {
    for n in 1..=6 {
        for a in enumerate_blowups(n).unwrap() {
            if classify_type(&a).unwrap() != FanType::B {
                continue;
            }
            let k = a.values().iter().position(|&x| x == -1).unwrap();
            let contracted = dual_contract(a.values(), k).unwrap();
            assert!(contracted.iter().all(|&x| x > 0));
            assert_eq!(is_cc_solution(&contracted).map(|c| c.k), Some(0), "{a}");
            assert_eq!(negative_blow_up(&contracted, k), a.values(), "{a}");
        }
    }
}

#[test]
fn rejects_foreign_sequences() {
    let octagon = FanSequence::new(vec![1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
    assert!(fan_from_sequence(&octagon).is_ok());
    assert_eq!(classify_type(&octagon).unwrap(), FanType::A);
    assert!(FanSequence::new(vec![1, 1, 1]).is_err());
    assert!(FanSequence::new(vec![1, 2, 2, 1, 3, 1, 2]).is_err());
    assert!(classify_type(&FanSequence::new(vec![0, 2, 0, -2]).unwrap()).is_err());
}
