//! End-to-end tests of the binary: exit codes, report shapes, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superqes"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

const OSP_INSTANCE: &str = r#"{
  "family": "3_5",
  "params": {
    "alpha": "1/2",
    "beta": "-1/2",
    "gamma": "1",
    "eps": 1,
    "p": 1,
    "q": 0,
    "module": { "kind": "label", "name": "n3.3" }
  }
}"#;

#[test]
fn list_tier_three_rows() {
    let out = run(&["list", "--tier", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 6);
    for (i, row) in rows.iter().enumerate() {
        assert!(row.starts_with(&format!("3_{}", i + 1)), "{row}");
    }
}

#[test]
fn list_modules_and_single_family() {
    let out = run(&["list", "--modules"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 10);
    assert!(text.contains("n0.0"));
    assert!(text.contains("n3.3"));

    let out = run(&["list", "--family", "2_5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("s = m+1 and either"));

    let out = run(&["list", "--family", "9_9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", OSP_INSTANCE);
    let out = run(&["validate", &good]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"family": "3_3", "params": {"alpha": "1", "m": 1}}"#,
    );
    let out = run(&["--format", "json", "validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["valid"], false);
    assert!(v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|m| m.as_str().unwrap().contains("2α = m")));

    let malformed = write(dir.path(), "malformed.json", "{ not json");
    let out = run(&["validate", &malformed]);
    assert_eq!(out.status.code(), Some(2));

    let unknown = write(
        dir.path(),
        "unknown.json",
        r#"{"family": "3_5", "params": {}, "surprise": true}"#,
    );
    let out = run(&["validate", &unknown]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_pass_fail_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "osp.json", OSP_INSTANCE);
    let out = run(&["--format", "json", "verify", &good, "--module", &good]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["rule_violations"].as_array().unwrap().len(), 0);

    // byte-identical reports on identical inputs
    let again = run(&["--format", "json", "verify", &good, "--module", &good]);
    assert_eq!(out.stdout, again.stdout);

    // a broken coupling produces a residual witness and exit 1
    let mutated = write(
        dir.path(),
        "mutated.json",
        r#"{"family": "3_5", "params": {"alpha": "1/2", "beta": "1/2", "gamma": "0", "eps": 1}}"#,
    );
    let out = run(&["--format", "json", "verify", &mutated]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], false);
    let failed: Vec<&serde_json::Value> = v["closure"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert!(!failed.is_empty());
    assert!(failed[0]["witness"]["residual"].as_str().is_some());
}

#[test]
fn aconst_values() {
    let out = run(&["--format", "json", "aconst", "--count", "12"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let values: Vec<&str> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(values.len(), 12);
    assert_eq!(
        &values[..10],
        &[
            "1",
            "1/2",
            "1/8",
            "1/16",
            "5/128",
            "7/256",
            "21/1024",
            "33/2048",
            "429/32768",
            "715/65536"
        ]
    );
    let out = run(&["aconst", "--count", "1"]);
    assert_eq!(stdout(&out).trim(), "a_1 = 1");
}

#[test]
fn spectrum_diagonal_example() {
    let dir = tempfile::tempdir().unwrap();
    // an even algebra with β = -1 preserves the polynomials of degree ≤ 2
    let instance = write(
        dir.path(),
        "even.json",
        r#"{"family": "s0_3", "params": {"alpha": "1/2", "beta": "-1"}}"#,
    );
    let module = write(
        dir.path(),
        "module.json",
        r#"{"family": "n3.1", "params": {"alpha": "1/2", "beta": "-1", "p": 2}}"#,
    );
    // H = (z∂z + αθ∂θ + β) + 1 acts diagonally with eigenvalues 0, 1, 2
    let quad = write(
        dir.path(),
        "quad.json",
        r#"{"linear": [{"a": 1, "coeff": "1"}], "constant": "1"}"#,
    );
    let out = run(&[
        "--format", "json", "spectrum", &instance, "--module", &module, "--quad", &quad,
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["module_dimension"], 3);
    let mut roots: Vec<String> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            assert_eq!(r["kind"], "exact");
            r["value"].as_str().unwrap().to_string()
        })
        .collect();
    roots.sort();
    assert_eq!(roots, vec!["0", "1", "2"]);

    // the raising generator of an incompatible even algebra escapes: exit 1
    let drifting = write(
        dir.path(),
        "drifting.json",
        r#"{"family": "s0_3", "params": {"alpha": "1/2", "beta": "0"}}"#,
    );
    let raising = write(
        dir.path(),
        "raising.json",
        r#"{"linear": [{"a": 2, "coeff": "1"}]}"#,
    );
    let out = run(&[
        "--format", "json", "spectrum", &drifting, "--module", &module, "--quad", &raising,
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["invariant"], false);
}

#[test]
fn hamiltonian_normal_order() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "osp.json", OSP_INSTANCE);
    let quad = write(
        dir.path(),
        "quad.json",
        r#"{"pairs": [{"a": 5, "b": 6, "coeff": "1"}]}"#,
    );
    // {θ∂z, z∂θ} = z∂z + θ∂θ
    let out = run(&[
        "--format",
        "json",
        "hamiltonian",
        &instance,
        "--quad",
        &quad,
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["operator"], "z·∂z + θ·∂θ");
    assert_eq!(v["order"], 1);

    let bad_quad = write(
        dir.path(),
        "bad_quad.json",
        r#"{"linear": [{"a": 42, "coeff": "1"}]}"#,
    );
    let out = run(&["hamiltonian", &instance, "--quad", &bad_quad]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn grid_sweep_passes() {
    let out = run(&["--format", "json", "verify", "--grid"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["total"].as_u64().unwrap() >= 100);
}

#[test]
fn verify_without_instance_is_usage_error() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}
