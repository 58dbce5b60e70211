use std::path::PathBuf;
use std::process::{Command, Output};

fn data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcbound"))
        .args(args)
        .current_dir(data())
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn bounds_reports_the_product_example() {
    let out = stdout(&["bounds", "t2xs2.json", "--explain"]);
    assert!(out.contains(r#""tc": {"lower": 4, "upper": 4}"#), "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let derivations = v["derivations"].as_array().unwrap();
    assert!(!derivations.is_empty());
    // every numeric claim in an explanation carries a citation
    assert!(derivations
        .iter()
        .all(|d| !d["citation"].as_str().unwrap().trim().is_empty()));
}

#[test]
fn explain_adds_candidates() {
    let plain = json(&["bounds", "rp8.json"]);
    let explained = json(&["bounds", "rp8.json", "--explain"]);
    assert!(plain["derivations"].as_array().unwrap().is_empty());
    let r4 = explained["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|b| b["invariant"] == "tc" && b["side"] == "upper")
        .flat_map(|b| b["candidates"].as_array().unwrap())
        .find(|c| c["source"] == "R4")
        .unwrap()
        .clone();
    assert_eq!(r4["value"], 17);
}

#[test]
fn integral_homology_of_rp2() {
    let v = json(&["homology", "rp2.json", "--coeff", "z"]);
    assert_eq!(v["betti"], serde_json::json!([1, 0, 0]));
    assert_eq!(v["torsion"], serde_json::json!([[], [2], []]));
    let text = stdout(&["--format", "text", "homology", "rp2.json", "--coeff", "z"]);
    assert!(text.contains("H_1 = Z/2"));
}

#[test]
fn ring_defaults_to_rationals() {
    let q = json(&["zcl", "sphere2.json"]);
    assert_eq!(q["coefficients"], "Q");
    assert_eq!(q["zcl"], 2);
    let z2 = json(&["zcl", "sphere2.json", "--coeff", "z2"]);
    assert_eq!(z2["zcl"], 1);
    let t = json(&["ring", "torus7.json"]);
    assert_eq!(t["cup_length"], 2);
    assert_eq!(t["zcl_witness"].as_array().unwrap().len(), 2);
}

#[test]
fn rings_refuse_integer_coefficients() {
    let out = run(&["ring", "rp2.json", "--coeff", "z"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_file_exits_with_one() {
    let out = run(&["skeleton", "missing.json", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing.json"), "{err}");
}

#[test]
fn bad_schema_exits_with_one() {
    let dir = std::env::temp_dir().join(format!("tcbound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"type": "sphere", "n": 2, "extra": 1}"#).unwrap();
    let out = run(&["bounds", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::write(&bad, r#"{"maximal_simplices": [[0, 0]]}"#).unwrap();
    let out = run(&["homology", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn contradictory_assertions_exit_with_one() {
    // a torus asserted to be simply connected contradicts its own homology
    let out = run(&["analyze", "torus7.json", "--simply-connected"]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn skeleton_reports_complement_dimension() {
    let v = json(&["skeleton", "sphere4.json", "1"]);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["complement_dim"], 2);
}

#[test]
fn complement_runs_both_models() {
    let v = json(&["complement", "torus7.json", "sphere1.json"]);
    assert_eq!(v["full"], true);
    assert_eq!(v["nerve"]["betti_q"], v["order"]["betti_q"]);
}

#[test]
fn subdivision_and_product_are_complexes() {
    let sd = json(&["subdivide", "sphere1.json"]);
    assert_eq!(sd["maximal_simplices"].as_array().unwrap().len(), 6);
    assert_eq!(sd["labels"].as_array().unwrap().len(), 6);
    let p = json(&["product", "sphere1.json", "sphere1.json"]);
    assert_eq!(p["maximal_simplices"].as_array().unwrap().len(), 18);
}

#[test]
fn covers() {
    let c = json(&["cover", "check", "cover.json"]);
    assert_eq!(c["multiplicity"], 1);
    assert_eq!(c["n_cover"], 3);
    let e = json(&["cover", "extend", "cover.json", "4"]);
    assert_eq!(e["sets"].as_array().unwrap().len(), 5);
    let w = json(&["cover", "combine", "cover.json", "cover.json"]);
    assert_eq!(w["sets"].as_array().unwrap().len(), 5);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["bounds", "skeleton_t5.json", "--explain"][..],
        &["--seed", "11", "cover", "fuzz", "--lemma-trials", "200"],
        &["--format", "text", "analyze", "sphere2.json", "--simply-connected", "--explain"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn analyze_explicit_sphere() {
    let v = json(&["analyze", "sphere2.json", "--simply-connected"]);
    assert_eq!(v["invariants"]["tc"], serde_json::json!({"lower": 2, "upper": 2}));
    assert_eq!(v["invariants"]["tcd"], serde_json::json!({"lower": 0, "upper": 0}));
}
