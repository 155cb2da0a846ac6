use std::process::{Command, Output};

use serde_json::Value;

fn skeinlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn trefoil_invariant() {
    let out = skeinlab(&["invariant", "--torus", "2", "3", "1", "--pairs", "[[[1],[1]]]"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["spec"], "T_2^3[0]");
    assert!(v["value"].as_str().unwrap().contains("q^2*t^-10"));
}

#[test]
fn hopf_fixture_reproduces() {
    let out = skeinlab(&["repro", "example-6.3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["checked"], 20);
    assert_eq!(v["mismatches"], Value::Array(vec![]));
}

#[test]
fn congruent_skein_family() {
    let out = skeinlab(&["congruence", "--p", "2", "--family", "t2", "--k", "0..3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["cases"].as_array().unwrap().len(), 4);
    assert_eq!(v["verdict"], true);
}

#[test]
fn special_polynomial_of_trefoil() {
    let out = skeinlab(&["special", "--torus", "2", "3", "1", "--pairs", "[[[1],[]]]"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["value"], "-t^-4 + 2*t^-2");
}

#[test]
fn reformulated_invariant_is_integral() {
    let out = skeinlab(&["reform", "--torus", "1", "2", "2", "--labels", "[[2],[1]]"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["kind"], "Z");
    assert_eq!(v["verdict"]["holds"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["invariant", "--torus", "2", "3", "1"][..],
        &["invariant", "--torus", "2", "4", "1", "--pairs", "[[[1],[]]]"],
        &["invariant", "--torus", "1", "2", "2", "--pairs", "[[[1],[]]]"],
        &["congruence", "--p", "4", "--family", "t2"],
        &["reform", "--torus", "2", "3", "1"],
        &["invariant", "--torus", "2", "3", "1", "--pairs", "[[[1],[]]]", "--reversed", "3"],
    ] {
        let out = skeinlab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn out_file_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("job.conf");
    let report = dir.path().join("report.json");
    std::fs::write(
        &cfg,
        format!("# trefoil\ntorus = 2 3 1\npairs = [[[1],[]]]\nout = {}\n", report.display()),
    )
    .unwrap();
    let out = skeinlab(&["special", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["value"], "-t^-4 + 2*t^-2");

    // A flag overrides the file.
    let other = dir.path().join("other.json");
    let out = skeinlab(&[
        "invariant",
        "--config",
        cfg.to_str().unwrap(),
        "--torus",
        "2",
        "5",
        "1",
        "--out",
        other.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&other).unwrap()).unwrap();
    assert_eq!(v["spec"], "T_2^5[0]");
    std::fs::write(&cfg, "bogus = 1\n").unwrap();
    assert_eq!(skeinlab(&["selftest", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn quick_selftest_passes() {
    let out = skeinlab(&["selftest", "--quick"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["passed"], true);
}
