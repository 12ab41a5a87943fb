//! Codespace preservation and logical actions of diagonal gates.

use std::collections::BTreeMap;

use proptest::prelude::*;
use unfolded_qrm::cube::{enumerate_subcubes, Subcube};
use unfolded_qrm::logic::{
    Action, DiagonalGateSpec, Level, LogicEngine, ZKind,
};
use unfolded_qrm::qrm::{big_unfolded, qrm_code, QrmParams};

fn qrm612() -> LogicEngine {
    LogicEngine::new(&qrm_code(QrmParams::new(6, 1, 2).unwrap()).unwrap()).unwrap()
}

fn counts(engine: &LogicEngine, level: Level) -> BTreeMap<usize, BTreeMap<Action, usize>> {
    let mut out: BTreeMap<usize, BTreeMap<Action, usize>> = BTreeMap::new();
    for dim in 1..=6 {
        for s in enumerate_subcubes(6, dim).unwrap() {
            let a = engine.action(&DiagonalGateSpec::tilde(level, s).unwrap()).unwrap();
            *out.entry(dim).or_default().entry(a).or_default() += 1;
        }
    }
    out
}

#[test]
fn s_preservation_by_dimension() {
    let c = counts(&qrm612(), Level::S);
    let expect = [
        (1, Action::NotPreserving, 192),
        (2, Action::NotPreserving, 240),
        (3, Action::NotPreserving, 160),
        (4, Action::NontrivialAction, 60),
        (5, Action::TrivialAction, 12),
        (6, Action::TrivialAction, 1),
    ];
    for (dim, action, n) in expect {
        assert_eq!(c[&dim].len(), 1, "dim {dim}: {:?}", c[&dim]);
        assert_eq!(c[&dim][&action], n, "dim {dim}");
    }
}

#[test]
fn t_preserves_only_on_the_full_cube() {
    let c = counts(&qrm612(), Level::T);
    for dim in 1..=5 {
        assert_eq!(c[&dim].keys().collect::<Vec<_>>(), vec![&Action::NotPreserving]);
    }
    assert_eq!(c[&6][&Action::NontrivialAction], 1);
}

#[test]
fn transversal_t_on_qrm612_gives_fifteen_ccz() {
    let triples = qrm612().logical_action_t_full().unwrap();
    assert_eq!(triples.len(), 15);
    for t in &triples {
        let mut all: Vec<usize> = t.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, vec![1, 2, 3, 4, 5, 6], "{t:?} must partition the coordinates");
    }
}

#[test]
fn qrm301_t_is_one_ccz() {
    let engine = LogicEngine::new(&qrm_code(QrmParams::new(3, 0, 1).unwrap()).unwrap()).unwrap();
    let t = engine.logical_action_t_full().unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.first().unwrap(), &[vec![1], vec![2], vec![3]]);
}

#[test]
fn big_unfolded_logical_structure() {
    let engine = LogicEngine::new(&big_unfolded().unwrap()).unwrap();
    assert_eq!(engine.logical_qubits(), vec![vec![1, 2], vec![3, 4], vec![5, 6]]);
    let t = engine.logical_action_t_full().unwrap();
    assert_eq!(t.len(), 1);
    let s = engine
        .logical_action_s(&Subcube::standard(6, &[1, 2, 3, 4]).unwrap())
        .unwrap();
    assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![[vec![1, 2], vec![3, 4]]]);
}

#[test]
fn tilde_gate_on_a_point_is_rejected() {
    let p = Subcube::new(6, 0, 0).unwrap();
    assert!(DiagonalGateSpec::tilde(Level::S, p).is_err());
}

#[test]
fn z_classification_of_subcube_indicators() {
    let engine = qrm612();
    for s in enumerate_subcubes(6, 3).unwrap() {
        assert_eq!(engine.classify_z(&s.indicator()).unwrap().kind, ZKind::Stabilizer);
    }
    for s in enumerate_subcubes(6, 2).unwrap() {
        let class = engine.classify_z(&s.indicator()).unwrap();
        assert_eq!(class.kind, ZKind::NontrivialLogical);
        assert_eq!(class.logical_type, Some(s.coords()));
    }
    for s in enumerate_subcubes(6, 1).unwrap() {
        assert_eq!(engine.classify_z(&s.indicator()).unwrap().kind, ZKind::NotInNormalizer);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The CZ set of S on a 4-dim subcube depends only on its direction.
    #[test]
    fn s_action_is_translation_invariant(free in 0u32..64, base in 0u32..64) {
        prop_assume!(free.count_ones() == 4);
        let engine = qrm612();
        let a = Subcube::new(6, 0, free).unwrap();
        let b = Subcube::new(6, base & !free, free).unwrap();
        prop_assert_eq!(engine.logical_action_s(&a).unwrap(), engine.logical_action_s(&b).unwrap());
    }

    /// Adding a Z stabilizer never changes a vector's class.
    #[test]
    fn z_class_is_stabilizer_invariant(free in 0u32..64, base in 0u32..64, sfree in 0u32..64, sbase in 0u32..64) {
        let engine = qrm612();
        let v = Subcube::new(6, base & !free, free).unwrap().indicator();
        let s = Subcube::new(6, sbase & !(sfree | 0b1111), sfree | 0b1111).unwrap().indicator();
        let mut w = v.clone();
        w.try_xor_assign(&s).unwrap();
        prop_assert_eq!(engine.classify_z(&v).unwrap().kind, engine.classify_z(&w).unwrap().kind);
    }
}
