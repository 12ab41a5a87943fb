//! Factory error rates: exact enumeration, truncation and Monte Carlo.

use unfolded_qrm::factory::{
    factory_catalog, monte_carlo, monte_carlo_sharded, truncated_rates, wilson, WILSON_Z,
};
use unfolded_qrm::qrm::{puncture_code, qrm_code, QrmParams};
use unfolded_qrm::registry;

#[test]
fn full_enumeration_is_exact() {
    let code = qrm_code(QrmParams::new(3, 0, 1).unwrap()).unwrap();
    let r = truncated_rates(&code, 0.1, 8).unwrap();
    assert!(r.truncation_bound.unwrap() < 1e-15);
    let accepted = r.accepted_by_weight.unwrap();
    assert_eq!(accepted.iter().sum::<u64>(), 128, "2^(n - rank hx) accepted supports");
    let logical = r.logical_by_weight.unwrap();
    assert_eq!(logical[2], 28);
    let lower = truncated_rates(&code, 0.1, 4).unwrap();
    assert!(lower.p_accept <= r.p_accept);
    assert!(r.p_accept - lower.p_accept <= lower.truncation_bound.unwrap() + 1e-15);
}

#[test]
fn low_p_conditional_infidelity_tracks_leading_order() {
    let code = qrm_code(QrmParams::new(3, 0, 1).unwrap()).unwrap();
    let p = 1e-4;
    let r = truncated_rates(&code, p, 8).unwrap();
    let lead = 28.0 * p * p;
    assert!((r.conditional_infidelity / lead - 1.0).abs() < 1e-2);
}

#[test]
fn oversized_enumeration_is_refused() {
    let code = registry::lookup("qrm722-punctured").unwrap().code().unwrap();
    assert!(truncated_rates(&code, 1e-3, 7).is_err());
    assert!(truncated_rates(&code, 1e-3, code.n()).is_err());
}

#[test]
fn invalid_probabilities_are_rejected() {
    let code = qrm_code(QrmParams::new(3, 0, 1).unwrap()).unwrap();
    assert!(truncated_rates(&code, -0.1, 2).is_err());
    assert!(truncated_rates(&code, 1.5, 2).is_err());
    assert!(monte_carlo(&code, 0.1, 0, 1).is_err());
}

#[test]
fn monte_carlo_is_deterministic_and_shard_independent() {
    let code = qrm_code(QrmParams::new(3, 0, 1).unwrap()).unwrap();
    let a = monte_carlo(&code, 0.05, 20_000, 42).unwrap();
    let b = monte_carlo(&code, 0.05, 20_000, 42).unwrap();
    assert_eq!(a, b);
    for shard in [1, 7, 1000, 50_000] {
        assert_eq!(monte_carlo_sharded(&code, 0.05, 20_000, 42, shard).unwrap(), a);
    }
    let c = monte_carlo(&code, 0.05, 20_000, 43).unwrap();
    assert_ne!(a.accepted, c.accepted);
}

#[test]
fn monte_carlo_interval_covers_exact_value() {
    let code = puncture_code(&qrm_code(QrmParams::new(4, 1, 1).unwrap()).unwrap(), 0).unwrap();
    let exact = truncated_rates(&code, 0.05, 15).unwrap();
    let mc = monte_carlo(&code, 0.05, 200_000, 9).unwrap();
    let ci = mc.p_accept_ci.unwrap();
    assert!(ci.lo <= exact.p_accept && exact.p_accept <= ci.hi);
}

#[test]
fn wilson_interval_is_sane() {
    let i = wilson(50, 100, WILSON_Z);
    assert!(i.lo < 0.5 && 0.5 < i.hi);
    let zero = wilson(0, 100, WILSON_Z);
    assert!(zero.lo == 0.0 && zero.hi > 0.0);
    assert_eq!(wilson(100, 100, WILSON_Z).hi, 1.0);
}

#[test]
fn catalog_distances_and_prefactors() {
    let cat = factory_catalog().unwrap();
    let get = |label: &str| cat.iter().find(|f| f.code_label == label).unwrap();
    assert_eq!((get("big-unfolded").d_z, get("big-unfolded").prefactor), (4, 8256));
    assert_eq!((get("rubik").d_z, get("rubik").prefactor), (4, 10416));
    assert_eq!((get("qrm722-punctured").d_z, get("qrm722-punctured").prefactor), (7, 11811));
    assert_eq!((get("qrm301").d_z, get("qrm301").prefactor), (2, 28));
}
