//! Linear-algebra invariants over F2 on random matrices.

use proptest::prelude::*;
use unfolded_qrm::f2core::{in_row_space, inner, kernel_basis, row_space_equal, BitVec, F2Matrix};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = F2Matrix> {
    (1..=max_cols, 0..=max_rows).prop_flat_map(|(cols, rows)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), cols), rows).prop_map(
            move |rows| {
                let rows = rows
                    .into_iter()
                    .map(|bits| {
                        BitVec::from_indices(
                            cols,
                            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
                        )
                        .unwrap()
                    })
                    .collect();
                F2Matrix::from_rows(cols, rows).unwrap()
            },
        )
    })
}

fn xor(a: &BitVec, b: &BitVec) -> BitVec {
    let mut out = a.clone();
    out.try_xor_assign(b).unwrap();
    out
}

proptest! {
    #[test]
    fn rank_is_invariant_under_row_operations(m in matrix(12, 80), i in 0usize..12, j in 0usize..12) {
        let r = m.rank();
        prop_assert!(r <= m.nrows().min(m.ncols()));
        if m.nrows() >= 2 {
            let (i, j) = (i % m.nrows(), j % m.nrows());
            let mut rows = m.rows().to_vec();
            if i != j {
                rows[j] = xor(&rows[j], &rows[i]);
            }
            rows.swap(0, i);
            let m2 = F2Matrix::from_rows(m.ncols(), rows).unwrap();
            prop_assert_eq!(m2.rank(), r);
            prop_assert!(row_space_equal(&m, &m2).unwrap());
        }
    }

    #[test]
    fn rank_nullity_and_kernel_orthogonality(m in matrix(12, 80)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.nrows() + m.rank(), m.ncols());
        prop_assert_eq!(k.rank(), k.nrows());
        for v in k.rows() {
            for row in m.rows() {
                prop_assert!(!inner(v, row).unwrap());
            }
        }
    }

    #[test]
    fn membership_tests_agree(m in matrix(10, 70), picks in prop::collection::vec(any::<bool>(), 10), noise in 0usize..70) {
        let mut combo = BitVec::zeros(m.ncols());
        for (row, pick) in m.rows().iter().zip(&picks) {
            if *pick {
                combo.try_xor_assign(row).unwrap();
            }
        }
        prop_assert!(in_row_space(&combo, &m).unwrap());
        prop_assert!(m.echelon().contains(&combo).unwrap());
        combo.flip(noise % m.ncols());
        prop_assert_eq!(in_row_space(&combo, &m).unwrap(), m.echelon().contains(&combo).unwrap());
    }

    #[test]
    fn echelon_basis_spans_the_same_space(m in matrix(12, 80)) {
        let e = m.echelon();
        let b = e.basis();
        prop_assert_eq!(b.nrows(), e.rank());
        prop_assert!(row_space_equal(&m, &b).unwrap());
    }

    #[test]
    fn text_round_trip(m in matrix(8, 40)) {
        prop_assume!(m.nrows() > 0);
        prop_assert_eq!(F2Matrix::from_text(&m.to_text()).unwrap(), m);
    }
}

#[test]
fn mismatched_lengths_are_errors() {
    let m = F2Matrix::identity(4);
    assert!(in_row_space(&BitVec::zeros(5), &m).is_err());
    assert!(row_space_equal(&m, &F2Matrix::identity(5)).is_err());
}
