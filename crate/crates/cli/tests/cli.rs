//! End-to-end tests of the command-line interface: build/enumerate flows,
//! classification output, exit codes, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfproj"))
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfproj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn build_then_enumerate_projections() {
    let dir = tempdir();
    let alg = dir.join("h4.json");
    let out = run(&[
        "build",
        "taft",
        "--n",
        "2",
        "--field",
        "prime:5",
        "--verify",
        "-o",
        alg.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    for (kind, expected) in [("right", 6), ("left", 6), ("two-sided", 2), ("weak", 26)] {
        let out = run(&[
            "enumerate",
            "-a",
            alg.to_str().unwrap(),
            "--what",
            "projections",
            "--kind",
            kind,
        ]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), expected, "kind {kind}");
    }
}

#[test]
fn classification_output_shape() {
    let out = run(&["classify-taft", "--n", "2", "--field", "prime:3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["items"].as_array().unwrap().len(), 6);
    assert_eq!(v["completeness"], "verified");
    assert_eq!(v["counts"]["nbeta"], 2);
    assert_eq!(v["orbit_count"], 5);
}

#[test]
fn faithfulness_report_for_the_ideal_example() {
    let dir = tempdir();
    let alg = dir.join("exff.json");
    let out = run(&[
        "build",
        "exff",
        "--field",
        "rational",
        "-o",
        alg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "coideal",
        "-a",
        alg.to_str().unwrap(),
        "--op",
        "faithfulness",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["idempotent"], true);
    assert_eq!(v["proper"], true);
    assert_eq!(v["left_annihilator_dim"], 0);
    assert_eq!(v["right_annihilator_dim"], 0);
}

#[test]
fn coideal_ops_roundtrip() {
    let dir = tempdir();
    let alg = dir.join("h4b.json");
    run(&[
        "build",
        "taft",
        "--n",
        "2",
        "--field",
        "prime:5",
        "-o",
        alg.to_str().unwrap(),
    ]);
    // P = 3 + 3g + x.
    let elem = dir.join("p.json");
    std::fs::write(&elem, "[3, 3, 1, 0]\n").unwrap();
    let out = run(&[
        "coideal",
        "-a",
        alg.to_str().unwrap(),
        "-e",
        elem.to_str().unwrap(),
        "--op",
        "np",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["subspace"].as_array().unwrap().len(), 2);
    assert_eq!(v["is_left_coideal"], true);

    let out = run(&[
        "coideal",
        "-a",
        alg.to_str().unwrap(),
        "-e",
        elem.to_str().unwrap(),
        "--op",
        "quotient",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["quotient_dim"], 2);
    assert_eq!(v["counital_integral"], serde_json::json!([3, 3, 1, 0]));

    let out = run(&[
        "check-projection",
        "-a",
        alg.to_str().unwrap(),
        "-e",
        elem.to_str().unwrap(),
        "--kind",
        "right",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["right"], true);
    assert_eq!(v["left"], false);
    assert_eq!(v["requested_kind_holds"], true);
}

#[test]
fn outputs_are_byte_identical_across_runs_and_jobs() {
    let dir = tempdir();
    let alg = dir.join("h4c.json");
    run(&[
        "build",
        "taft",
        "--n",
        "2",
        "--field",
        "prime:5",
        "-o",
        alg.to_str().unwrap(),
    ]);
    let one = run(&[
        "--jobs",
        "1",
        "enumerate",
        "-a",
        alg.to_str().unwrap(),
        "--what",
        "projections",
        "--kind",
        "weak",
    ]);
    let two = run(&[
        "--jobs",
        "3",
        "enumerate",
        "-a",
        alg.to_str().unwrap(),
        "--what",
        "projections",
        "--kind",
        "weak",
    ]);
    assert!(one.status.success() && two.status.success());
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn exit_codes() {
    // Usage error: taft without --n.
    let out = run(&["build", "taft", "--field", "prime:5"]);
    assert_eq!(out.status.code(), Some(2));
    // Input error: no order-2 root designated over F_5 with omega of order 4.
    let out = run(&["build", "taft", "--n", "3", "--field", "prime:5"]);
    assert_eq!(out.status.code(), Some(2));
    // Budget exceeded.
    let dir = tempdir();
    let alg = dir.join("h4d.json");
    run(&[
        "build",
        "taft",
        "--n",
        "2",
        "--field",
        "prime:5",
        "-o",
        alg.to_str().unwrap(),
    ]);
    let out = run(&[
        "enumerate",
        "-a",
        alg.to_str().unwrap(),
        "--what",
        "projections",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_suite_against_goldens() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden");
    let out = run(&[
        "verify-suite",
        "--level",
        "quick",
        "--golden",
        golden.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["skipped"], 1);
}
