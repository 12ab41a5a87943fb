//! Minimum-weight censuses checked against brute force and closed forms.

use proptest::prelude::*;
use unfolded_qrm::distance::{
    big_unfolded_census, big_unfolded_low_weight_logicals, brute_force_census, brute_force_logical_census, brute_force_min_words, closed_form_count,
    enumerate_affine, gaussian_binomial, is_affine_subspace_indicator, min_weight_words,
    punctured_min_logicals, qrm_min_logicals, CensusMethod,
};
use unfolded_qrm::qrm::{puncture_code, qrm_code, rm_generators, QrmParams, RmParams};

#[test]
fn affine_enumeration_agrees_with_brute_force() {
    for m in 1..=5 {
        for r in 0..m {
            let p = RmParams::new(m, r).unwrap();
            if p.dimension() > 16 {
                continue;
            }
            let fast = min_weight_words(p).unwrap();
            let slow = brute_force_census(&rm_generators(p).unwrap()).unwrap();
            assert_eq!(fast.method, CensusMethod::AffineEnumeration);
            assert_eq!((fast.d, fast.count), (slow.d, slow.count), "RM_{m}({r})");
        }
    }
}

#[test]
fn enumerated_subspaces_match_the_gaussian_count() {
    for m in 1..=5 {
        for k in 0..=m {
            let n = enumerate_affine(m, k).unwrap().count() as u128;
            assert_eq!(n, gaussian_binomial(m, k) << (m - k), "m={m} k={k}");
        }
    }
}

#[test]
fn known_counts() {
    assert_eq!(min_weight_words(RmParams::new(4, 2).unwrap()).unwrap().count, 140);
    let big = min_weight_words(RmParams::new(7, 4).unwrap()).unwrap();
    assert_eq!((big.d, big.count), (Some(8), 188_976));
    assert_eq!(closed_form_count(7, 4).unwrap(), 188_976);
}

#[test]
fn minimum_words_are_affine_subspaces() {
    for (m, r) in [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2)] {
        let words = brute_force_min_words(&rm_generators(RmParams::new(m, r).unwrap()).unwrap()).unwrap();
        assert!(words.iter().all(is_affine_subspace_indicator), "RM_{m}({r})");
    }
}

#[test]
fn qrm_logical_census_agrees_with_brute_force() {
    for (m, q, r) in [(3, 0, 1), (4, 0, 1), (4, 1, 2), (5, 1, 2)] {
        let p = QrmParams::new(m, q, r).unwrap();
        let fast = qrm_min_logicals(p).unwrap();
        let slow = brute_force_logical_census(&qrm_code(p).unwrap()).unwrap();
        assert_eq!((fast.d, fast.count), (slow.d, slow.count), "QRM_{m}({q},{r})");
    }
}

#[test]
fn punctured_census_agrees_with_brute_force() {
    let code = puncture_code(&qrm_code(QrmParams::new(4, 1, 1).unwrap()).unwrap(), 0).unwrap();
    let fast = punctured_min_logicals(&code).unwrap();
    let slow = brute_force_logical_census(&code).unwrap();
    assert_eq!((fast.d, fast.count), (Some(3), 35));
    assert_eq!((slow.d, slow.count), (Some(3), 35));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn punctured_census_is_position_independent(pos in 0usize..16) {
        let code = puncture_code(&qrm_code(QrmParams::new(4, 1, 1).unwrap()).unwrap(), pos).unwrap();
        let c = punctured_min_logicals(&code).unwrap();
        prop_assert_eq!((c.d, c.count), (Some(3), 35));
    }

    #[test]
    fn affine_subspaces_are_recognised(m in 2usize..=5, k in 0usize..=5, pick in 0usize..1000) {
        prop_assume!(k <= m);
        let all: Vec<_> = enumerate_affine(m, k).unwrap().collect();
        let s = &all[pick % all.len()];
        prop_assert!(is_affine_subspace_indicator(&s.indicator()));
        prop_assert_eq!(s.points().count(), 1 << k);
        prop_assert!(s.points().all(|v| s.contains(v)));
    }
}

#[test]
fn big_unfolded_has_distance_four() {
    assert_eq!(big_unfolded_low_weight_logicals().unwrap(), 0);
    let c = big_unfolded_census().unwrap();
    assert_eq!(c.d, Some(4));
    let split = c.split.unwrap();
    assert_eq!((split.trivial, split.nontrivial), (2160, 8256));
    assert_eq!(c.count, 8256);
}
