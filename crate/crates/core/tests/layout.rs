//! Layout coordinates, footprints, exports and golden SVGs.

use std::collections::BTreeSet;
use std::path::PathBuf;

use unfolded_qrm::bases::BasisKind;
use unfolded_qrm::cube::gray_order;
use unfolded_qrm::layout::{
    assign_coordinates, export_layout, file_name, footprints, ExportFormat, LayoutKind,
};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against a stored golden; `UPDATE_GOLDEN=1` rewrites it instead.
fn check_golden(kind: BasisKind, layout: LayoutKind) {
    let basis = kind.build().unwrap();
    let svg = export_layout(&layout.spec(), &basis, ExportFormat::Svg).unwrap();
    let path = golden_path(&file_name(kind.label(), layout, ExportFormat::Svg));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &svg).unwrap();
    }
    let stored = std::fs::read(&path).unwrap();
    assert!(stored == svg, "{} differs from a fresh export", path.display());
}

#[test]
fn golden_small_unfolded_planar4() {
    check_golden(BasisKind::SmallUnfolded, LayoutKind::Planar4);
}

#[test]
fn golden_qrm611_planar6() {
    check_golden(BasisKind::Qrm611, LayoutKind::Planar6);
}

#[test]
fn coordinates_are_a_bijection_onto_the_grid() {
    for kind in LayoutKind::ALL {
        let spec = kind.spec();
        let coords = assign_coordinates(&spec).unwrap();
        let distinct: BTreeSet<_> = coords.iter().cloned().collect();
        assert_eq!(distinct.len(), 1 << spec.m(), "{kind:?}");
        let extent = spec.extent();
        assert_eq!(extent.iter().product::<usize>(), 1 << spec.m());
        for c in &coords {
            assert!(c.iter().zip(&extent).all(|(x, e)| x < e));
        }
    }
}

#[test]
fn grid_neighbours_differ_in_one_bit() {
    for kind in LayoutKind::ALL {
        let spec = kind.spec();
        let coords = assign_coordinates(&spec).unwrap();
        for (u, cu) in coords.iter().enumerate() {
            for (v, cv) in coords.iter().enumerate() {
                let dist: usize = cu.iter().zip(cv).map(|(a, b)| a.abs_diff(*b)).sum();
                if dist == 1 {
                    assert_eq!((u ^ v).count_ones(), 1, "{kind:?}: {u} vs {v}");
                }
            }
        }
    }
}

#[test]
fn gray_orders_match_the_documented_sequences() {
    assert_eq!(gray_order(2).unwrap(), vec![0b00, 0b01, 0b11, 0b10]);
    assert_eq!(
        gray_order(3).unwrap(),
        vec![0b000, 0b001, 0b011, 0b010, 0b110, 0b111, 0b101, 0b100]
    );
}

#[test]
fn small_unfolded_and_rubik_footprints_are_all_boxes() {
    for kind in [BasisKind::SmallUnfolded, BasisKind::Rubik] {
        let basis = kind.build().unwrap();
        let fps = footprints(&LayoutKind::for_basis(kind).spec(), &basis).unwrap();
        assert!(fps.iter().all(|f| f.contiguous_box), "{kind:?}");
    }
}

#[test]
fn planar6_product_squares_are_boxes_and_four_appended_ones_are_not() {
    for kind in [BasisKind::Qrm611, BasisKind::BigUnfolded] {
        let basis = kind.build().unwrap();
        let fps = footprints(&LayoutKind::Planar6.spec(), &basis).unwrap();
        let bad: Vec<_> = fps.iter().filter(|f| !f.contiguous_box).collect();
        assert_eq!(bad.len(), 4, "{kind:?}");
        let mut sides: Vec<_> = bad.iter().map(|f| f.sides()).collect();
        sides.sort();
        assert_eq!(sides, vec![vec![1, 6], vec![1, 8], vec![6, 1], vec![8, 1]]);
    }
}

#[test]
fn json_export_lists_every_qubit_and_stabilizer() {
    for kind in BasisKind::ALL {
        let layout = LayoutKind::for_basis(kind);
        let basis = kind.build().unwrap();
        let bytes = export_layout(&layout.spec(), &basis, ExportFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(v["qubits"].as_array().unwrap().len(), 1 << basis.m());
        assert_eq!(
            v["stabilizers"].as_array().unwrap().len(),
            basis.generators().len()
        );
    }
}

#[test]
fn svg_of_a_3d_layout_is_refused() {
    let basis = BasisKind::Rubik.build().unwrap();
    assert!(export_layout(&LayoutKind::Rubik6.spec(), &basis, ExportFormat::Svg).is_err());
}

#[test]
fn svg_text_is_escaped() {
    let basis = BasisKind::SmallUnfolded.build().unwrap();
    let svg = export_layout(&LayoutKind::Planar4.spec(), &basis, ExportFormat::Svg).unwrap();
    let text = String::from_utf8(svg).unwrap();
    assert!(text.contains("+&lt;1,4&gt;"));
    assert!(!text.contains("+<"));
}
