use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn spinor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinor")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn query(args: &[&str]) -> Value {
    let mut full = vec!["query"];
    full.extend_from_slice(args);
    let o = spinor(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(stdout(&o).trim()).expect("one JSON record")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const H2: &str = r#"{"label": "h2", "dimension": 2, "gram": [["0", "1/2"], ["1/2", "0"]], "isotropic": [[0, 1]]}"#;

#[test]
fn build_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "h2.json", H2);
    let o = spinor(&["build", "-i", &path]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("N = 1"), "{out}");
    assert!(out.contains("phi = [x1]") && out.contains("psi = [x0]"), "{out}");
}

#[test]
fn build_json_for_h6() {
    let o = spinor(&["build", "--fixture", "F-H6", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dims"]["N"], 4);
    assert_eq!(v["identity_holds"], true);
    assert_eq!(v["phi"]["coefficients"].as_array().unwrap().len(), 6);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("asym.json", r#"{"label": "x", "dimension": 2, "gram": [[0, 1], [0, 0]], "isotropic": [[0, 1]]}"#),
        ("aniso.json", r#"{"label": "x", "dimension": 2, "gram": [[0, "1/2"], ["1/2", 0]], "isotropic": [[1, 1]]}"#),
        ("extra.json", r#"{"label": "x", "dimension": 2, "gram": [[0, "1/2"], ["1/2", 0]], "isotropic": [[0, 1]], "w": 1}"#),
        ("short.json", r#"{"label": "x", "dimension": 3, "gram": [[0, "1/2"], ["1/2", 0]], "isotropic": [[0, 1]]}"#),
        ("garbage.json", "not json"),
    ];
    for (name, text) in cases {
        let path = write(dir.path(), name, text);
        let o = spinor(&["build", "-i", &path]);
        assert_eq!(code(&o), 2, "{name}");
        assert!(!o.stderr.is_empty(), "{name}");
    }
    assert_eq!(code(&spinor(&["build", "-i", "/nonexistent/fixture.json"])), 2);
    assert_eq!(code(&spinor(&["build", "--fixture", "F-NOPE"])), 2);
    assert_eq!(code(&spinor(&["verify", "--fixture", "F-QS", "--suite", "bogus"])), 2);
    assert_eq!(code(&spinor(&["build"])), 2);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = spinor(&["verify", "--fixture", "F-QS", "--suite", "all", "--strict", "--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
    }
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let report: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(report["overall"], "PASS");
    let verdict = |op: &str| {
        report["records"].as_array().unwrap().iter().find(|r| r["op"] == op).unwrap()["verdict"].as_str().unwrap().to_string()
    };
    assert!(verdict("simplicity_verdict").starts_with("SIMPLE"));
    assert!(verdict("irreducibility_check").starts_with("REDUCIBLE"));
}

#[test]
fn verify_dual_and_numerics_for_h6() {
    let o = spinor(&["verify", "--fixture", "F-H6", "--suite", "dual"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = spinor(&["verify", "--fixture", "F-H6", "--suite", "stability-numerics", "--json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\"slope\": \"1\"") || stdout(&o).contains("\"slope\": 1"), "{}", stdout(&o));
}

#[test]
fn verify_every_builtin() {
    let o = spinor(&["verify", "--fixture", "all", "--suite", "all", "--strict"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("overall PASS").count(), 7);
}

#[test]
fn queries() {
    assert_eq!(query(&["hom", "F-H6", "F-H6"])["dim"], 1);
    assert_eq!(query(&["iso", "F-H6a", "F-H6a-shift"])["verdict"], "ISO");
    assert_eq!(query(&["iso", "F-QS", "F-QS-shift"])["verdict"], "NOT_ISO");
    assert_eq!(query(&["cohomology", "F-H6", "i=1", "t=0"])["h"], 0);
    assert_eq!(query(&["cohomology", "F-H6", "i=0", "t=1"])["h"], 20);
    let r = query(&["restrict", "F-H6", "coords=0,1,2,3,4"]);
    assert_eq!(r["map"]["bijective"], true);
    assert_eq!(r["kind"], "MATCHES_T");
    let c = query(&["cone", "F-C5", "u=[[0,0,0,0,1]]"]);
    assert_eq!(c["map"]["commutes"], true);
    assert_eq!(query(&["flag", "F-QS"])["split_by_module"], false);
    assert_eq!(query(&["flag", "F-H6"])["split_by_module"], true);
}

#[test]
fn query_operand_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "h2.json", H2);
    let shifted = format!("{path}-shift");
    assert_eq!(query(&["hom", &path, &shifted])["dim"], 0);
}

#[test]
fn bad_queries_exit_2() {
    for args in [
        vec!["query", "hom", "F-H6"],
        vec!["query", "hom", "F-H6", "F-QS"],
        vec!["query", "cohomology", "F-H6", "i=1"],
        vec!["query", "cohomology", "F-H6", "i=1", "t=40"],
        vec!["query", "restrict", "F-H6", "coords=9"],
        vec!["query", "iso", "F-H6", "F-H6", "colour=red"],
        vec!["query", "frobnicate", "F-H6"],
    ] {
        assert_eq!(code(&spinor(&args)), 2, "{args:?}");
    }
}

#[test]
fn printed_example_is_equivalent_and_stable() {
    let a = spinor(&["paper-example", "--json"]);
    let b = spinor(&["paper-example", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["identity_holds"], true);
    assert_eq!(v["equivalent"], true);
    let text = stdout(&spinor(&["paper-example"]));
    assert!(text.contains("EQUIVALENT"));
}

#[test]
fn fixture_listing_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = spinor(&["fixtures", "F-QS"]);
    assert_eq!(code(&o), 0);
    let path = write(dir.path(), "qs.json", &stdout(&o));
    let o = spinor(&["verify", "-i", &path, "--suite", "dependence", "--strict"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&spinor(&["fixtures"])).lines().count(), 7);
}
