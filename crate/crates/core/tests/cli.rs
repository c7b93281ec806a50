use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abcosp")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn equiv_on_equivalent_cospans_passes() {
    let f = fixture("equiv.json");
    let out = run(&["equiv", "--in", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["outcome"], "pass");
    assert_eq!(r["value"]["equivalent"], true);
}

#[test]
fn inequivalent_pair_exits_with_counterexample() {
    let f = fixture("equiv.json");
    let out = run(&["equiv", "--in", f.to_str().unwrap(), "--names", "identity,split"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["outcome"], "fail");
    assert!(r["counterexample"].is_string());
}

#[test]
fn leq_returns_the_witness() {
    let f = fixture("equiv.json");
    let r = report(&run(&["leq", "--in", f.to_str().unwrap()]));
    assert_eq!(r["value"]["witness"]["data"], serde_json::json!([[1], [0]]));
}

#[test]
fn homology_of_the_triangle() {
    let f = fixture("spheres.json");
    let r = report(&run(&["homology", "--q", "1", "--in", f.to_str().unwrap()]));
    assert_eq!(r["value"]["triangle"][0]["dim"], 1);
    assert_eq!(r["value"]["square"][0]["dim"], 1);
    assert_eq!(r["value"]["tetrahedron"][0]["dim"], 0);
    let r = report(&run(&["homology", "--q", "2", "--in", f.to_str().unwrap()]));
    assert_eq!(r["value"]["tetrahedron"][0]["dim"], 1);
}

#[test]
fn mayer_vietoris_on_two_arcs() {
    let f = fixture("spheres.json");
    let out = run(&["mv-check", "--in", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["outcome"], "pass");
}

#[test]
fn verify_on_the_circle_pair() {
    let f = fixture("circle.json");
    for q in ["0", "1"] {
        let out = run(&["verify", "--q", q, "--in", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "q = {q}");
        let r = report(&out);
        assert_eq!(r["outcome"], "pass");
        assert!(r["value"]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }
}

#[test]
fn extensions_and_filter() {
    let f = fixture("circle.json");
    let r = report(&run(&["extend-cospan", "--q", "0", "--d", "1", "--in", f.to_str().unwrap()]));
    assert_eq!(r["value"]["arc_out"]["class"]["basis"]["data"], serde_json::json!([["1"]]));
    assert_eq!(r["value"]["arc_out"]["in_filter"], true);
    let r = report(&run(&["extend-cospan", "--d", "0", "--in", f.to_str().unwrap()]));
    assert_eq!(r["value"]["arc_out"]["in_filter"], false);
    let r = report(&run(&["extend-span", "--q", "1", "--in", f.to_str().unwrap()]));
    assert_eq!(r["value"]["arc_out"]["class"]["dim"], 1);
    let out = run(&["extend-span", "--q", "0", "--in", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn linear_commands_produce_values() {
    let f = fixture("equiv.json");
    for cmd in ["canon", "compose", "transpose", "tensor", "dagger"] {
        let out = run(&[cmd, "--in", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert_eq!(report(&out)["outcome"], "value");
    }
}

#[test]
fn reports_are_deterministic_and_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&["random-suite", "--seed", "7", "--count", "10", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ra, rb);
    let r: Value = serde_json::from_slice(&ra).unwrap();
    assert_eq!(r["outcome"], "pass");
    assert!(r.get("timing_ms").is_none());
}

#[test]
fn empty_random_suite_is_vacuous() {
    let out = run(&["random-suite", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r["value"].as_array().unwrap().iter().all(|s| s["cases"] == 0));
}

#[test]
fn timing_only_on_request() {
    let r = report(&run(&["random-suite", "--count", "1", "--timing"]));
    assert!(r["timing_ms"].is_u64());
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["canon"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n \"version\": \"1\",\n \"field\": {\"char\": 2,}\n}").unwrap();
    let out = run(&["canon", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    std::fs::write(&bad, r#"{"version": "1", "field": {"char": 0}, "matrices": {"m": [["2/4"]]}}"#).unwrap();
    let out = run(&["canon", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lowest terms"));
}
