mod common;

use std::collections::HashSet;

use num_bigint::BigInt;
use quiddity_core::enumerate::{
    count_dissections, count_multi_dissections, count_quiddities, find_dissection_with_quiddity,
    for_each_dissection, periodic_dissections, periodic_filter, quiddities, quiddity_classes,
};
use quiddity_core::formulas::{d_l_nm, d_multi, q_nk};
use quiddity_core::MultiIndex;

#[test]
fn counts_match_chord_set_backtracking() {
    for l in 1..=4 {
        for n in 1..=8 {
            let table = count_dissections(n, l).unwrap();
            let oracle = common::brute_counts(n, l);
            for m in 1..=n {
                let expected = oracle.get(&m).copied().unwrap_or(0);
                assert_eq!(table.get(m), BigInt::from(expected), "l={l} n={n} m={m}");
            }
        }
    }
}

#[test]
fn counts_match_closed_form() {
    for l in 1..=4 {
        for n in 1..=10 {
            let table = count_dissections(n, l).unwrap();
            for m in 1..=n {
                assert_eq!(table.get(m), d_l_nm(l, n, m), "l={l} n={n} m={m}");
            }
        }
    }
}

#[test]
fn dissection_lists_match_backtracking() {
    for (n, l) in [(5, 1), (6, 2), (7, 3), (8, 3), (8, 4)] {
        let mut ours: Vec<Vec<(usize, usize)>> = periodic_dissections(n, l)
            .unwrap()
            .iter()
            .map(|d| d.chords().iter().map(|c| (c.i, c.j)).collect())
            .collect();
        for c in &mut ours {
            c.sort();
        }
        ours.sort();
        assert_eq!(ours, common::brute_dissections(n, l), "n={n} l={l}");
    }
}

#[test]
fn quiddity_counts_match_oracle_and_formula() {
    for n in 1..=10 {
        let table = count_quiddities(n, 3).unwrap();
        for k in 0..=n / 3 {
            assert_eq!(table.get(n - 3 * k), q_nk(n, k), "n={n} k={k}");
        }
        if n <= 8 {
            assert_eq!(
                table.total(),
                BigInt::from(common::brute_quiddities(n, 3).len()),
                "n={n}"
            );
            assert_eq!(
                quiddities(n, 3).unwrap(),
                common::brute_quiddities(n, 3),
                "n={n}"
            );
        }
    }
}

#[test]
fn quiddities_bounded_by_dissections() {
    for l in 1..=4 {
        for n in 1..=8 {
            let (q, d) = (
                count_quiddities(n, l).unwrap(),
                count_dissections(n, l).unwrap(),
            );
            for m in 1..=n {
                assert!(q.get(m) <= d.get(m), "l={l} n={n} m={m}");
            }
            if l == 3 && n <= 5 {
                assert_eq!(q.by_m, d.by_m, "n={n}");
            }
        }
    }
}

#[test]
fn octagon_collisions() {
    assert_eq!(count_dissections(6, 3).unwrap().get(3), BigInt::from(36));
    assert_eq!(count_quiddities(6, 3).unwrap().get(3), BigInt::from(34));
    let collided: Vec<_> = quiddity_classes(6, 3)
        .unwrap()
        .into_values()
        .filter(|ds| ds.len() > 1)
        .collect();
    assert_eq!(collided.len(), 2);
    assert!(collided
        .iter()
        .all(|ds| ds.len() == 2 && ds.iter().all(|d| d.num_cells() == 3)));
}

#[test]
fn little_schroeder_totals() {
    let expected = [3u64, 11, 45, 197, 903];
    for (n, &e) in (2..=6).zip(&expected) {
        let oracle: u64 = common::brute_counts(n, 1).values().sum();
        assert_eq!(oracle, e);
        assert_eq!(count_dissections(n, 1).unwrap().total(), BigInt::from(e));
    }
}

#[test]
fn multi_index_counts() {
    for norm in 1..=8 {
        for m in MultiIndex::with_norm(norm) {
            assert_eq!(count_multi_dissections(&m), d_multi(&m), "{m:?}");
        }
    }
}

#[test]
fn witness_search() {
    for n in 1..=7 {
        for q in quiddities(n, 3).unwrap() {
            let d = find_dissection_with_quiddity(&q, 3).expect("witness exists");
            assert_eq!(d.quiddity().0, q);
            assert!(d.is_l_periodic(3));
        }
    }
    assert!(find_dissection_with_quiddity(&[1, 2, 1, 2, 1, 2, 1, 2], 1).is_some());
    assert!(find_dissection_with_quiddity(&[2, 2, 2, 2], 3).is_none());
}

#[test]
fn stream_is_deterministic() {
    let collect = || {
        let mut out = Vec::new();
        for_each_dissection(7, periodic_filter(3), |d| out.push(d.serialize())).unwrap();
        out
    };
    let (a, b) = (collect(), collect());
    assert_eq!(a, b);
    assert_eq!(a.iter().collect::<HashSet<_>>().len(), a.len());
}
