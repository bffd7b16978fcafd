//! Golden-file tests: every CLI path, byte-exact stdout and exit codes.
//!
//! Expected outputs live in `tests/golden/`; quiver inputs in the workspace
//! `quivers/` directory. Fixed seeds make all outputs reproducible, and the
//! worker-count flag must never change a byte.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_affclust")
}

fn quiver(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../quivers")
        .join(name);
    root.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {path:?}: {e}"))
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_golden(args: &[&str], golden_name: &str, expected_code: i32) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, golden(golden_name), "stdout differs for {args:?}");
    assert_eq!(
        out.status.code(),
        Some(expected_code),
        "exit code for {args:?}"
    );
}

#[test]
fn classify_text_and_structured() {
    assert_golden(
        &["classify", "--quiver", &quiver("a3-cycle.quiver")],
        "classify_a3.txt",
        0,
    );
    assert_golden(
        &["classify", "--quiver", &quiver("kronecker.quiver")],
        "classify_kronecker.txt",
        0,
    );
    assert_golden(
        &[
            "classify",
            "--quiver",
            &quiver("a3-cycle.json"),
            "--format",
            "structured",
        ],
        "classify_a3_structured.txt",
        0,
    );
}

#[test]
fn classify_rejects_non_affine_with_exit_3() {
    let out = run(&["classify", "--quiver", &quiver("a3-linear.quiver")]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("not an affine quiver"), "stderr: {stderr}");
}

#[test]
fn tubes_outputs() {
    assert_golden(
        &["tubes", "--quiver", &quiver("a3-cycle.quiver")],
        "tubes_a3.txt",
        0,
    );
    assert_golden(
        &["tubes", "--quiver", &quiver("d4-star.quiver")],
        "tubes_d4.txt",
        0,
    );
    assert_golden(
        &["tubes", "--quiver", &quiver("kronecker.quiver")],
        "tubes_kronecker.txt",
        0,
    );
    assert_golden(
        &[
            "tubes",
            "--quiver",
            &quiver("a2-cycle.quiver"),
            "--format",
            "structured",
        ],
        "tubes_a2_structured.txt",
        0,
    );
}

#[test]
fn mutate_seed_dumps() {
    assert_golden(
        &[
            "mutate",
            "--quiver",
            &quiver("a3-cycle.quiver"),
            "--path",
            "4,3",
        ],
        "mutate_a3_path43.txt",
        0,
    );
    assert_golden(
        &["mutate", "--quiver", &quiver("a2-cycle.quiver")],
        "mutate_a2_empty.txt",
        0,
    );
}

#[test]
fn mutate_rejects_bad_positions_with_exit_2() {
    let out = run(&[
        "mutate",
        "--quiver",
        &quiver("a2-cycle.quiver"),
        "--path",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_lists_variables_with_denominators() {
    assert_golden(
        &[
            "enumerate",
            "--quiver",
            &quiver("a2-cycle.quiver"),
            "--depth",
            "3",
        ],
        "enumerate_a2_depth3.txt",
        0,
    );
}

#[test]
fn enumerate_cap_exhaustion_exits_4() {
    let out = run(&[
        "enumerate",
        "--quiver",
        &quiver("a3-cycle.quiver"),
        "--depth",
        "6",
        "--cap",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn enumerate_depth_above_hard_cap_is_a_usage_error() {
    let out = run(&[
        "enumerate",
        "--quiver",
        &quiver("a2-cycle.quiver"),
        "--depth",
        "13",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hom_accepts_coordinates_and_dimension_vectors() {
    let out = run(&[
        "hom",
        "--quiver",
        &quiver("a3-cycle.quiver"),
        "trans:i=1:k=0",
        "tube:0:socle=1:len=1",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0\n");
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "hom",
        "--quiver",
        &quiver("a3-cycle.quiver"),
        "1,0,1,1",
        "0,1,1,0",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2\n");
}

#[test]
fn hom_rejects_malformed_objects_with_exit_2() {
    let out = run(&[
        "hom",
        "--quiver",
        &quiver("a3-cycle.quiver"),
        "nonsense",
        "0,1,1,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_hom_recomputes_module_homs() {
    let out = run(&[
        "oracle-hom",
        "--quiver",
        &quiver("a3-cycle.quiver"),
        "1,0,1,1",
        "0,1,1,0",
        "--prime",
        "32003",
        "--seed",
        "7",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_report_and_exit_codes() {
    assert_golden(
        &[
            "verify",
            "--quiver",
            &quiver("a2-cycle.quiver"),
            "--path",
            "2",
            "--depth",
            "4",
        ],
        "verify_a2_path2_depth4.txt",
        0,
    );
    assert_golden(
        &[
            "verify",
            "--quiver",
            &quiver("a2-cycle.quiver"),
            "--path",
            "2",
            "--depth",
            "4",
            "--format",
            "structured",
        ],
        "verify_a2_path2_depth4.json",
        0,
    );
    // The carve-out variant mismatches at the non-brick self-pairing.
    let out = run(&[
        "verify",
        "--quiver",
        &quiver("a2-cycle.quiver"),
        "--path",
        "2",
        "--depth",
        "4",
        "--variant",
        "carveout",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_accepts_object_set_targets() {
    let out = run(&[
        "verify",
        "--quiver",
        &quiver("a3-cycle.quiver"),
        "--target",
        "0,0,0,1;1,1,1,2;1,0,0,1;1,1,0,1",
        "--depth",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("# summary: rows=9"), "stdout: {stdout}");
}

#[test]
fn worker_count_never_changes_output() {
    let baseline = run(&[
        "verify",
        "--quiver",
        &quiver("a2-cycle.quiver"),
        "--path",
        "2",
        "--depth",
        "4",
    ]);
    for jobs in ["1", "4"] {
        let out = run(&[
            "verify",
            "--quiver",
            &quiver("a2-cycle.quiver"),
            "--path",
            "2",
            "--depth",
            "4",
            "--jobs",
            jobs,
        ]);
        assert_eq!(
            out.stdout, baseline.stdout,
            "--jobs {jobs} changed the output"
        );
    }
}

#[test]
fn example_a3_reproduces_its_golden_table() {
    assert_golden(&["example-a3"], "example_a3.txt", 0);
    let out = run(&["example-a3", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("structured output is JSON");
    assert_eq!(doc["pass"], serde_json::json!(true));
    assert_eq!(doc["rows"].as_array().unwrap().len(), 7);
}

#[test]
fn usage_error_exits_2() {
    let out = run(&["classify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
