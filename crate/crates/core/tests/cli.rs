use std::path::Path;
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

const SU3_T: &str = r#"{"algebra":{"kind":"su","n":3},"subalgebra":{"name":"maximal_torus"}}"#;
const SU2_SU2_0: &str = r#"{"algebra":{"kind":"sum","summands":[{"kind":"su","n":2},{"kind":"su","n":2}]},"subalgebra":{"name":"zero"}}"#;

struct Run {
    code: i32,
    report: Value,
    stdout: String,
    stderr: String,
}

fn write(dir: &TempDir, name: &str, text: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn invcx(spec: &Path, command: &str, extra: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_invcx"))
        .arg("--spec")
        .arg(spec)
        .args(["--command", command])
        .args(extra)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().expect("exit code"),
        report: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stdout,
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn swap_j() -> Value {
    let mut rows = vec![vec!["0"; 6]; 6];
    for k in 0..3 {
        rows[k + 3][k] = "1";
        rows[k][k + 3] = "-1";
    }
    json!(rows)
}

#[test]
fn classify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let r = invcx(&write(&dir, "a.json", SU3_T), "classify", &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["exists"], json!(true));
    assert_eq!(r.report["parabolic_count"], json!(6));
    assert_eq!(r.report["fiber_dim"], json!(0));

    let su2 = r#"{"algebra":{"kind":"su","n":2},"subalgebra":{"name":"zero"}}"#;
    let r = invcx(&write(&dir, "b.json", su2), "classify", &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["exists"], json!(false));
    assert_eq!(r.report["reason"], json!("odd_dimension"));
}

#[test]
fn check_reports_swap_witness() {
    let dir = TempDir::new().unwrap();
    let mut spec: Value = serde_json::from_str(SU2_SU2_0).unwrap();
    spec["j"] = swap_j();
    let r = invcx(&write(&dir, "s.json", &spec.to_string()), "check", &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["integrable"], json!(false));
    assert_eq!(r.report["invariant"], json!(true));
    let w = &r.report["nijenhuis_witness"];
    assert_eq!(w["u"], json!(0));
    assert_eq!(w["v"], json!(1));
    assert_eq!(w["value"], json!(["0", "0", "1", "0", "0", "-1"]));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = r#"{"algebra":{"kind":"su","n":3},"subalgebra":{"name":"maximal_torus"},"j":[["1/0"]]}"#;
    let r = invcx(&write(&dir, "bad.json", bad), "check", &[]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["error"]["kind"], json!("ParseError"));
    assert_eq!(r.report["error"]["path"], json!("j[0][0]"));
    assert!(!r.stderr.is_empty());

    let wrong =
        r#"{"algebra":{"kind":"su","n":3},"subalgebra":{"name":"maximal_torus"},"j":[["0","-1"],["1","0"]]}"#;
    let r = invcx(&write(&dir, "wrong.json", wrong), "check", &[]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["error"]["kind"], json!("ValidationError"));
    assert!(r.report["error"]["message"].as_str().unwrap().contains("6x6"));

    let unknown = r#"{"algebra":{"kind":"su","n":3},"subalgebra":{"name":"maximal_torus"},"colour":"red"}"#;
    let r = invcx(&write(&dir, "unknown.json", unknown), "classify", &[]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["error"]["kind"], json!("ParseError"));
    assert!(r.report["error"]["message"].as_str().unwrap().contains("colour"));

    let r = invcx(&dir.path().join("missing.json"), "classify", &[]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["error"]["kind"], json!("IoError"));

    let r = invcx(
        &write(&dir, "range.json", SU3_T),
        "construct",
        &["--parabolic-index", "6"],
    );
    assert_eq!(r.code, 2);
}

#[test]
fn construct_then_decompose_round_trips() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "ce.json", SU2_SU2_0);
    for index in 0..4 {
        let out = dir.path().join(format!("c{index}.json"));
        let idx = index.to_string();
        let r = invcx(
            &spec,
            "construct",
            &["--parabolic-index", &idx, "--out", out.to_str().unwrap()],
        );
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert!(r.stdout.is_empty());
        let built: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert!(built["ledger"]
            .as_array()
            .unwrap()
            .iter()
            .all(|e| e["passed"] == json!(true)));

        let mut problem: Value = serde_json::from_str(SU2_SU2_0).unwrap();
        problem["j"] = built["j"].clone();
        let back = invcx(&write(&dir, "j.json", &problem.to_string()), "decompose", &[]);
        assert_eq!(back.code, 0, "{}", back.stderr);
        assert_eq!(back.report["parabolic_index"], json!(index));
        assert_eq!(back.report["j1"], built["j1"]);

        let verify = invcx(
            &write(&dir, "j.json", &problem.to_string()),
            "verify",
            &["--seed", "3"],
        );
        assert_eq!(verify.code, 0, "{}", verify.stdout);
    }
}

#[test]
fn custom_fiber_structure() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "ce.json", SU2_SU2_0);
    let j1 = write(&dir, "j1.json", r#"[["1","-2"],["1","-1"]]"#);
    let r = invcx(&spec, "construct", &["--j1", j1.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.report["j1"], json!([["1", "-2"], ["1", "-1"]]));

    let not_cx = write(&dir, "id.json", r#"[["1","0"],["0","1"]]"#);
    let r = invcx(&spec, "construct", &["--j1", not_cx.to_str().unwrap()]);
    assert_eq!(r.code, 2);
}

#[test]
fn validate_and_catalog() {
    let dir = TempDir::new().unwrap();
    let r = invcx(&write(&dir, "a.json", SU3_T), "validate", &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["valid"], json!(true));

    let r = invcx(&write(&dir, "a.json", SU3_T), "catalog", &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["algebra"]["dim"], json!(8));
    assert_eq!(r.report["maximal_torus"]["dim"], json!(2));
    assert!(r.report["algebra"]["basis_convention"].is_string());

    // the Heisenberg algebra violates no axiom but has no invariant inner product
    let heis = json!({
        "algebra": {"kind": "explicit", "dim": 3, "brackets": [{"i": 0, "j": 1, "value": ["0", "0", "1"]}]}
    });
    let r = invcx(&write(&dir, "h.json", &heis.to_string()), "validate", &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["valid"], json!(false));
}

#[test]
fn explicit_algebra() {
    let dir = TempDir::new().unwrap();
    let so3 = json!({
        "algebra": {"kind": "explicit", "name": "so(3)", "dim": 3, "brackets": [
            {"i": 0, "j": 1, "value": ["0", "0", "1"]},
            {"i": 1, "j": 2, "value": ["1", "0", "0"]},
            {"i": 2, "j": 0, "value": ["0", "1", "0"]}
        ]},
        "subalgebra": {"name": "span", "basis": [["0", "0", "1"]]}
    });
    let r = invcx(&write(&dir, "so3.json", &so3.to_string()), "classify", &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.report["parabolic_count"], json!(2));
}

#[test]
fn symmetric_command() {
    let dir = TempDir::new().unwrap();
    let spec = r#"{"algebra":{"kind":"su","n":3},"subalgebra":{"name":"block_u","k":2}}"#;
    let path = write(&dir, "cp2.json", spec);
    let built = invcx(&path, "construct", &[]);
    assert_eq!(built.code, 0);
    let mut problem: Value = serde_json::from_str(spec).unwrap();
    problem["j"] = built.report["j"].clone();
    let r = invcx(&write(&dir, "j.json", &problem.to_string()), "symmetric", &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.report["verdict"], json!("symmetric"));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "a.json", SU3_T);
    let a = invcx(&spec, "construct", &["--parabolic-index", "4"]);
    let b = invcx(&spec, "construct", &["--parabolic-index", "4"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);

    let mut problem: Value = serde_json::from_str(SU3_T).unwrap();
    problem["j"] = a.report["j"].clone();
    let jp = write(&dir, "j.json", &problem.to_string());
    let v1 = invcx(&jp, "verify", &["--seed", "11"]);
    let v2 = invcx(&jp, "verify", &["--seed", "11"]);
    assert_eq!(v1.code, 0);
    assert_eq!(v1.stdout, v2.stdout);
}
