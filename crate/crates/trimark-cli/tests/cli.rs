use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn trimark(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trimark")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = trimark(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn error_code(args: &[&str]) -> String {
    let out = trimark(args);
    assert_eq!(out.status.code(), Some(1), "{args:?}");
    let v: Value = serde_json::from_slice(&out.stderr).expect("error JSON on stderr");
    assert!(v["message"].is_string());
    v["error"].as_str().unwrap().to_string()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn worked_examples() {
    assert_eq!(stdout(&["canon", "B A^2 Z B A^3 Z"]), "B^2 A^2 Z\n");
    assert_eq!(stdout(&["canon", "B", "A^2", "Z", "B", "A^3", "Z"]), "B^2 A^2 Z\n");
    let out = stdout(&["decompose", "7", "26"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("B^3 A B^2 A"));
    let v: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(v["alpha"], serde_json::json!([1, 1]));
    assert_eq!(v["beta"], serde_json::json!([2, 3]));
    let v: Value = serde_json::from_str(&stdout(&["linking", "B A B A B A^2 B A B^5 A B^3 A^2"])).unwrap();
    assert_eq!(v, serde_json::json!({"p1": -2, "p3": 2}));
}

#[test]
fn matrices_and_classes() {
    assert_eq!(stdout(&["matrix", "B^3 A^2"]), "[[1, 2], [3, 7]]\n");
    let v: Value = serde_json::from_str(&stdout(&["matrix", "--json", "B^3 A^2"])).unwrap();
    assert_eq!((v["a"].as_i64(), v["d"].as_i64(), v["trace_abs"].as_i64()), (Some(1), Some(7), Some(8)));
    let v: Value = serde_json::from_str(&stdout(&["classify", "--json", "A^3 B^3 A B^4 A^3 B^2 A"])).unwrap();
    assert_eq!(v["class"], "turbulent");
    assert_eq!(v["nielsen_bound"], 662);
    let v: Value = serde_json::from_str(&stdout(&["classify", "--json", "Z"])).unwrap();
    assert_eq!(v["class"], "finite_order_2");
    assert_eq!(stdout(&["factor", "1", "2", "3", "7"]), "B^3 A^2\n");
    assert_eq!(stdout(&["perm", "B A"]).lines().next(), Some("(1;2;3) -> (2;3;1)"));
    assert_eq!(stdout(&["compose", "B A^2 Z", "B A^3 Z"]), "B^2 A^2 Z\n");
}

#[test]
fn big_entries_are_strings() {
    // entries of (AB)^40 are Fibonacci numbers beyond 2^53
    let w = vec!["A B"; 40].join(" ");
    let v: Value = serde_json::from_str(&stdout(&["matrix", "--json", &w])).unwrap();
    assert_eq!(v["b"], "23416728348467685");
    assert_eq!(v["det"], 1);
}

#[test]
fn codes_round_trip() {
    let code = stdout(&["code", "A B^2 Z"]);
    let word = stdout(&["code", "--decode", code.trim()]);
    assert_eq!(stdout(&["canon", word.trim()]), stdout(&["canon", "A B^2 Z"]));
}

#[test]
fn euclid_table() {
    let out = stdout(&["euclid", "78", "21"]);
    assert!(out.contains("coefficients: 3 1 2 1"), "{out}");
    assert!(out.contains("gcd: 3"));
    let v: Value = serde_json::from_str(&stdout(&["euclid", "--json", "78", "21"])).unwrap();
    assert_eq!(v["period"], 33);
    assert_eq!(v["identity_holds"], true);
}

#[test]
fn snail_outputs() {
    let v: Value = serde_json::from_str(&stdout(&["snail", "3", "4", "--json"])).unwrap();
    assert_eq!(v["marked"], serde_json::json!(["-3/2", "1/2", "2"]));
    let arc = &v["arcs"][0];
    assert!(arc["center"].is_string() && arc["radius"].is_string() && arc["side"].is_i64());
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("sn_3_4.svg");
    stdout(&["snail", "3", "4", "--svg", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains("<svg") && svg.contains("marked") && svg.contains("axis"));
    assert_eq!(stdout(&["snail", "3", "4", "--svg", "-"]), stdout(&["snail", "3", "4", "--svg", "-"]));
    assert!(stdout(&["snail", "-3", "4"]).starts_with("SN(-3; 4)"));
}

#[test]
fn tree_output() {
    let out = stdout(&["tree", "B^3 A^2"]);
    assert_eq!(out, "R+ G+ R- | R+ G+ R- R+ R+ G- R- R+ G- R-\n[[1, 2], [3, 7]]\n");
    let colored = stdout(&["tree", "--color", "A"]);
    assert!(colored.contains("\x1b[31mR+\x1b[0m"));
    assert!(stdout(&["tree", "A", "--svg", "-"]).contains("<svg"));
}

#[test]
fn skeleton_files() {
    let wiggly = scratch(
        "wiggly.json",
        r#"{"X": [-1, 0, 1], "start": -1, "excursions": [
            {"side": 1, "landing": "1/2"}, {"side": -1, "landing": "1/4"},
            {"side": 1, "landing": "3/4"}, {"side": -1, "landing": "1/3"},
            {"side": 1, "landing": 1}]}"#,
    );
    let reduced = stdout(&["skeleton", "reduce", wiggly.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&reduced).unwrap();
    assert_eq!(v["excursions"].as_array().unwrap().len(), 1);
    let path = scratch("reduced.json", &reduced);
    let v: Value = serde_json::from_str(&stdout(&["skeleton", "recognize", path.to_str().unwrap()])).unwrap();
    assert_eq!(v, serde_json::json!({"class": "simple_snail", "n": 1, "p": 1, "emerging_side": 1}));
    assert_eq!(error_code(&["skeleton", "recognize", wiggly.to_str().unwrap()]), "not_reduced");
    let bad = scratch("bad.json", r#"{"X": [0, 1], "start": "1/2", "excursions": []}"#);
    assert_eq!(error_code(&["skeleton", "reduce", bad.to_str().unwrap()]), "invalid_crossing_sequence");
    let garbage = scratch("garbage.json", "not json");
    assert_eq!(error_code(&["skeleton", "reduce", garbage.to_str().unwrap()]), "invalid_json");
    assert_eq!(error_code(&["skeleton", "reduce", "/nonexistent/file.json"]), "io_error");
}

#[test]
fn domain_errors() {
    assert_eq!(error_code(&["decompose", "6", "9"]), "not_coprime");
    assert_eq!(error_code(&["decompose", "0", "9"]), "non_positive");
    assert_eq!(error_code(&["canon", "A^"]), "syntax_error");
    assert_eq!(error_code(&["linking", "A"]), "not_pure_permutation_trivial");
    assert_eq!(error_code(&["linking", "A^2 Y"]), "orientation_reversing");
    assert_eq!(error_code(&["tree", "A^-1"]), "not_positive_core");
    assert_eq!(error_code(&["factor", "2", "0", "0", "1"]), "determinant_invalid");
    assert_eq!(error_code(&["factor", "1", "-1", "0", "1"]), "not_positive");
    assert_eq!(error_code(&["snail", "0", "3"]), "invalid_params");
    assert_eq!(error_code(&["euclid", "0", "3"]), "non_positive");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [&[][..], &["bogus"], &["decompose", "7"], &["decompose", "x", "1"], &["matrix"]] {
        assert_eq!(trimark(args).status.code(), Some(2), "{args:?}");
    }
    assert!(trimark(&["--help"]).status.success());
}

#[test]
fn output_is_stable() {
    for args in [&["classify", "A B"][..], &["snail", "8", "13", "--json"], &["tree", "B A^3 B"]] {
        assert_eq!(trimark(args).stdout, trimark(args).stdout);
    }
}
