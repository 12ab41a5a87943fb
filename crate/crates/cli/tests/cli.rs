//! End-to-end runs of the `uqrm` binary.

use std::process::{Command, Output};

fn uqrm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqrm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (bool, serde_json::Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = uqrm(&all);
    let v = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (out.status.success(), v)
}

#[test]
fn verify_basis_reports_rank() {
    let (ok, v) = json(&["verify-basis", "qrm611"]);
    assert!(ok);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["rank"], 57);
    assert_eq!(v["payload"]["spans"], true);
}

#[test]
fn verify_basis_accepts_the_rubik_alias() {
    let (ok, v) = json(&["verify-basis", "qrm612"]);
    assert!(ok);
    assert_eq!(v["payload"]["generators"], 42);
}

#[test]
fn unknown_code_fails_with_nonzero_exit() {
    let out = uqrm(&["census", "no-such-code"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn census_of_small_code() {
    let (ok, v) = json(&["census", "qrm301"]);
    assert!(ok);
    assert_eq!(v["payload"]["d"], 2);
    assert_eq!(v["payload"]["count"], 28);
}

#[test]
fn logical_action_of_t_on_qrm301_is_one_ccz() {
    let (ok, v) = json(&["logical-action", "qrm301"]);
    assert!(ok);
    let circuit = v["payload"]["circuit"].as_array().unwrap();
    assert_eq!(circuit.len(), 1);
    assert_eq!(circuit[0]["gate"], "CCZ");
}

#[test]
fn logical_action_of_s_on_a_subcube() {
    let (ok, v) = json(&["logical-action", "big-unfolded", "--subcube", "000000+<1,2,3,4>"]);
    assert!(ok, "{v}");
    assert_eq!(v["payload"]["gate"], "S");
    assert_eq!(v["payload"]["circuit"].as_array().unwrap().len(), 1);
}

#[test]
fn appendix_tables_match() {
    let (ok, v) = json(&["appendix-tables"]);
    assert!(ok);
    assert_eq!(v["payload"]["entries"].as_array().unwrap().len(), 16);
    assert_eq!(v["payload"]["presentations_agree"], true);
}

#[test]
fn export_writes_json_and_svg() {
    let dir = std::env::temp_dir().join(format!("uqrm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json_path = dir.join("layout.json");
    let (ok, v) = json(&["export", "small-unfolded", "planar-4", "json", json_path.to_str().unwrap()]);
    assert!(ok);
    assert_eq!(v["payload"]["stabilizer_count"], 11);
    let parsed: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&json_path).unwrap()).unwrap();
    assert_eq!(parsed["qubits"].as_array().unwrap().len(), 16);

    let svg_path = dir.join("layout.svg");
    let (ok, _) = json(&["export", "qrm611", "planar-6", "svg", "--out", svg_path.to_str().unwrap()]);
    assert!(ok);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<?xml"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn export_of_3d_layout_as_svg_fails() {
    let dir = std::env::temp_dir().join(format!("uqrm-cli-3d-{}", std::process::id()));
    let (ok, v) = json(&["export", "rubik", "rubik-6", "svg", "--out", dir.to_str().unwrap()]);
    assert!(!ok);
    assert_eq!(v["status"], "fail");
}

#[test]
fn factory_analyze_and_mc() {
    let (ok, v) = json(&["factory", "analyze", "--code", "qrm301", "--p", "0.01", "--wmax", "8"]);
    assert!(ok);
    let exact = v["payload"]["conditional_infidelity"].as_f64().unwrap();
    assert!(exact > 0.0 && exact < 0.01);
    let (ok, a) = json(&["factory", "mc", "--code", "qrm301", "--p", "0.01", "--samples", "2000", "--seed", "7"]);
    assert!(ok);
    let (_, b) = json(&["factory", "mc", "--code", "qrm301", "--p", "0.01", "--samples", "2000", "--seed", "7"]);
    assert_eq!(a, b);
}

#[test]
fn factory_analyze_refuses_oversized_enumeration() {
    let (ok, _) = json(&["factory", "analyze", "--code", "qrm722-punctured", "--p", "0.001", "--wmax", "7"]);
    assert!(!ok);
}

#[test]
fn factory_catalog_lists_five_factories() {
    let (ok, v) = json(&["factory", "catalog"]);
    assert!(ok);
    assert_eq!(v["payload"].as_array().unwrap().len(), 5);
}

#[test]
fn qrm_builds_and_punctures() {
    let (ok, v) = json(&["qrm", "--m", "4", "--q", "1", "--r", "1", "--puncture", "0"]);
    assert!(ok);
    assert_eq!(v["payload"]["n"], 15);
    assert_eq!(v["payload"]["census"]["count"], 35);
}

#[test]
fn human_output_without_json_flag() {
    let out = uqrm(&["verify-basis", "small-unfolded"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("small-unfolded:"));
}
