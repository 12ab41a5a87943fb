//! Named bases and the diagonal translated-square spaces.

use proptest::prelude::*;
use unfolded_qrm::bases::{
    diagonal_pairs, diagonal_space, diagonal_target, qrm611_appended_squares,
    qrm611_product_squares, BasisKind, DiagonalParams,
};
use unfolded_qrm::f2core::row_space_equal;

#[test]
fn basis_sizes() {
    for (kind, n) in [
        (BasisKind::SmallUnfolded, 11),
        (BasisKind::Qrm611, 57),
        (BasisKind::BigUnfolded, 54),
        (BasisKind::Rubik, 42),
        (BasisKind::Qrm722, 99),
    ] {
        let b = kind.build().unwrap();
        assert_eq!(b.generators().len(), n, "{kind:?}");
        assert_eq!(b.matrix().rank(), n, "{kind:?}");
    }
}

#[test]
fn qrm611_is_products_plus_appended() {
    let products = qrm611_product_squares().unwrap();
    let appended = qrm611_appended_squares().unwrap();
    assert_eq!((products.len(), appended.len()), (49, 8));
    let b = BasisKind::Qrm611.build().unwrap();
    for g in products.iter().chain(&appended) {
        assert!(b.generators().contains(g), "{g}");
    }
}

#[test]
fn generators_are_squares_or_cubes() {
    for kind in BasisKind::ALL {
        let b = kind.build().unwrap();
        for g in b.generators() {
            assert!((2..=3).contains(&g.dim()), "{kind:?}: {g}");
        }
    }
}

#[test]
fn diagonal_pairs_are_sorted_and_inside_the_cube() {
    for m in 2..=7 {
        for f in 1..=m {
            for (a, b) in diagonal_pairs(m, f) {
                assert!(1 <= a && a < b && b <= m);
            }
        }
    }
}

#[test]
fn bad_offsets_are_rejected() {
    let mut p = DiagonalParams::random(4, 2, 1).unwrap();
    let (&key, _) = p.offsets.iter().next().unwrap();
    p.offsets.insert(key, 1 << (key.0 - 1));
    assert!(DiagonalParams::new(p.m, p.f_max, p.offsets).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The span of translated squares does not depend on the offsets chosen.
    #[test]
    fn diagonal_space_is_offset_independent(m in 3usize..=6, f in 1usize..=6, seed in any::<u64>()) {
        prop_assume!(f <= m);
        let p = DiagonalParams::random(m, f, seed).unwrap();
        let got = diagonal_space(&p).unwrap();
        let want = diagonal_target(m, f).unwrap();
        prop_assert!(row_space_equal(&got, &want).unwrap());
    }
}
