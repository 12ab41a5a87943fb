//! Reed-Muller and quantum Reed-Muller constructions.

use proptest::prelude::*;
use unfolded_qrm::f2core::{inner, kernel_basis, row_space_equal};
use unfolded_qrm::qrm::{
    binomial, plotkin_generators, puncture_code, puncture_matrix, qrm_code, rm_generators, shorten,
    QrmParams, RmParams,
};

#[test]
fn plotkin_recursion_matches_monomial_evaluation() {
    for m in 0..=7 {
        for r in 0..=m {
            let p = RmParams::new(m, r).unwrap();
            let a = rm_generators(p).unwrap();
            let b = plotkin_generators(p).unwrap();
            assert_eq!(a.rank(), p.dimension(), "RM_{m}({r})");
            assert!(row_space_equal(&a, &b).unwrap(), "RM_{m}({r})");
        }
    }
}

#[test]
fn dimension_is_a_sum_of_binomials() {
    for m in 1..=7 {
        for r in 0..=m {
            let expect: u64 = (0..=r as u64).map(|i| binomial(m as u64, i)).sum();
            assert_eq!(RmParams::new(m, r).unwrap().dimension() as u64, expect);
        }
    }
}

#[test]
fn dual_of_rm_is_rm_of_complementary_order() {
    for m in 1..=7 {
        for r in 0..m {
            let a = rm_generators(RmParams::new(m, r).unwrap()).unwrap();
            let b = rm_generators(RmParams::new(m, m - r - 1).unwrap()).unwrap();
            assert!(row_space_equal(&kernel_basis(&a), &b).unwrap(), "m={m} r={r}");
        }
    }
}

#[test]
fn qrm_parameters() {
    for (m, q, r, k) in [(3, 0, 1, 3), (4, 1, 1, 0), (6, 1, 1, 0), (6, 1, 2, 15), (7, 2, 2, 0)] {
        let c = qrm_code(QrmParams::new(m, q, r).unwrap()).unwrap();
        assert_eq!(c.n(), 1 << m);
        assert_eq!(c.k(), k, "QRM_{m}({q},{r})");
        for x in c.hx().rows() {
            for z in c.hz().rows() {
                assert!(!inner(x, z).unwrap());
            }
        }
    }
}

#[test]
fn puncturing_requires_k_zero() {
    let c = qrm_code(QrmParams::new(6, 1, 2).unwrap()).unwrap();
    assert!(puncture_code(&c, 0).is_err());
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(RmParams::new(3, 4).is_err());
    assert!(QrmParams::new(0, 0, 0).is_err());
    assert!(QrmParams::new(4, 3, 1).is_err());
}

proptest! {
    #[test]
    fn shortening_and_puncturing_are_dual(m in 2usize..=6, r in 0usize..6, pos in 0usize..64) {
        prop_assume!(r < m);
        let pos = pos % (1 << m);
        let c = rm_generators(RmParams::new(m, r).unwrap()).unwrap();
        let dual = kernel_basis(&c);
        let lhs = kernel_basis(&shorten(&c, pos).unwrap());
        let rhs = puncture_matrix(&dual, pos).unwrap();
        prop_assert!(row_space_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn punctured_k0_codes_keep_orthogonality(pos in 0usize..16) {
        let c = qrm_code(QrmParams::new(4, 1, 1).unwrap()).unwrap();
        let p = puncture_code(&c, pos).unwrap();
        prop_assert_eq!(p.n(), 15);
        prop_assert_eq!(p.hx().rank() + 1, c.hx().rank());
        prop_assert_eq!(p.hz().rank() + 1, c.hz().rank());
        prop_assert_eq!(p.k(), 1);
    }
}
