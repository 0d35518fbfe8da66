//! End-to-end checks of the installed binary: output shape, exit codes,
//! error reporting, and the machine format.

use std::path::{Path, PathBuf};
use std::process::Output;

fn corpus(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(file)
}

fn racg(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_racg"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("racg-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn reduce_prints_normal_form_and_descents() {
    let pentagon = corpus("pentagon.toml");
    let out = racg(&["reduce", pentagon.to_str().unwrap(), "--word", "2 1 2 4 5 4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("normal form: 1 5"), "{text}");
    assert!(text.contains("length: 2"), "{text}");
    assert!(text.contains("right descents: {1, 5}"), "{text}");
    assert!(text.contains("left descents: {1, 5}"), "{text}");
}

#[test]
fn reduce_of_the_empty_word_prints_epsilon() {
    let pentagon = corpus("pentagon.toml");
    let out = racg(&["reduce", pentagon.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("normal form: ε"), "{text}");
    assert!(text.contains("right descents: {}"), "{text}");
}

#[test]
fn reduce_machine_output_is_a_json_document() {
    let pentagon = corpus("pentagon.toml");
    let out = racg(&[
        "reduce",
        pentagon.to_str().unwrap(),
        "--word",
        "2 1 2 4 5 4",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["command"], "reduce");
    assert_eq!(doc["normal_form"], serde_json::json!(["1", "5"]));
    assert_eq!(doc["length"], 2);
    assert_eq!(doc["right_descents"], serde_json::json!(["1", "5"]));
    assert_eq!(doc["input"]["digest"].as_str().unwrap().len(), 12);
    assert!(doc["timing_ms"].is_number());
}

#[test]
fn digest_is_stable_across_commands_and_runs() {
    let pentagon = corpus("pentagon.toml");
    let digest_of = |args: &[&str]| {
        let doc: serde_json::Value = serde_json::from_str(&stdout_of(&racg(args))).unwrap();
        doc["input"]["digest"].as_str().unwrap().to_owned()
    };
    let a = digest_of(&[
        "reduce",
        pentagon.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    let b = digest_of(&[
        "analyze",
        pentagon.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(a, b);
    assert!(a.chars().all(|c| c.is_ascii_hexdigit()));
    // Same system under a different file name digests identically.
    let copy = scratch_file(
        "pentagon-copy.toml",
        &std::fs::read_to_string(&pentagon).unwrap(),
    );
    let c = digest_of(&["reduce", copy.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(a, c);
    std::fs::remove_file(copy).unwrap();
}

#[test]
fn unknown_generator_in_word_exits_two() {
    let pentagon = corpus("pentagon.toml");
    let out = racg(&["reduce", pentagon.to_str().unwrap(), "--word", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown generator \"9\""));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn machine_format_errors_are_json_on_stdout() {
    let pentagon = corpus("pentagon.toml");
    let out = racg(&[
        "reduce",
        pentagon.to_str().unwrap(),
        "--word",
        "9",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["error"]["kind"], "input");
    assert!(doc["error"]["message"]
        .as_str()
        .unwrap()
        .contains("unknown generator"));
}

#[test]
fn missing_file_exits_two_and_names_the_path() {
    let out = racg(&["analyze", "/no/such/file.toml"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("/no/such/file.toml"));
}

#[test]
fn malformed_files_exit_two_with_a_diagnostic() {
    let dup = scratch_file(
        "dup.toml",
        "generators = [\"a\", \"b\"]\ncommuting_pairs = [[\"a\", \"b\"], [\"b\", \"a\"]]\n",
    );
    let out = racg(&["analyze", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("duplicate commuting pair"));
    std::fs::remove_file(dup).unwrap();

    let syntax = scratch_file("syntax.toml", "generators = [\"a\"\n");
    let out = racg(&["analyze", syntax.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(syntax).unwrap();
}

#[test]
fn analyze_reports_structure_and_orbit_density() {
    let pentagon = corpus("pentagon.toml");
    let out = racg(&["analyze", pentagon.to_str().unwrap(), "--subset", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("verdict: minimal"), "{text}");
    assert!(text.contains("orbit density for {1, 3}: true"), "{text}");
    assert!(
        text.contains("maximal spherical subsets: {1, 2} {1, 5} {2, 3} {3, 4} {4, 5}"),
        "{text}"
    );

    // Space-separated subsets are accepted too.
    let out = racg(&["analyze", pentagon.to_str().unwrap(), "--subset", "1 2"]);
    assert!(stdout_of(&out).contains("orbit density for {1, 2}: false"));
}

#[test]
fn analyze_machine_verdicts_are_tagged() {
    let product = corpus("product-dihedral.toml");
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&racg(&[
        "analyze",
        product.to_str().unwrap(),
        "--format",
        "machine",
    ])))
    .unwrap();
    assert_eq!(doc["verdict"]["outcome"], "not-minimal");
    assert_eq!(doc["verdict"]["part_a"], serde_json::json!(["a", "b"]));
    assert_eq!(doc["verdict"]["part_b"], serde_json::json!(["c", "d"]));

    let complete = corpus("complete3.toml");
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&racg(&[
        "analyze",
        complete.to_str().unwrap(),
        "--format",
        "machine",
    ])))
    .unwrap();
    assert_eq!(doc["verdict"]["outcome"], "empty-boundary");
}

#[test]
fn analyze_writes_dot_files() {
    let pentagon = corpus("pentagon.toml");
    let commutation = std::env::temp_dir().join(format!("racg-dot-c-{}.dot", std::process::id()));
    let infinity = std::env::temp_dir().join(format!("racg-dot-i-{}.dot", std::process::id()));
    let out = racg(&[
        "analyze",
        pentagon.to_str().unwrap(),
        "--dot-commutation",
        commutation.to_str().unwrap(),
        "--dot-infinity",
        infinity.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let c = std::fs::read_to_string(&commutation).unwrap();
    assert!(c.starts_with("graph commutation {"), "{c}");
    assert!(c.contains("\"1\" -- \"2\";"), "{c}");
    let i = std::fs::read_to_string(&infinity).unwrap();
    assert!(i.contains("\"1\" -- \"3\";"), "{i}");
    // The five-cycle and its complement partition the ten vertex pairs.
    assert_eq!(c.matches(" -- ").count(), 5);
    assert_eq!(i.matches(" -- ").count(), 5);
    std::fs::remove_file(commutation).unwrap();
    std::fs::remove_file(infinity).unwrap();
}

#[test]
fn witness_on_a_finite_group_reports_empty_boundary() {
    let complete = corpus("complete3.toml");
    let out = racg(&["witness", complete.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("outcome: finite-group"));
}

#[test]
fn witness_on_a_splitting_lists_holes_per_generator() {
    let product = corpus("product-dihedral.toml");
    let out = racg(&["witness", product.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("outcome: splitting"), "{text}");
    assert!(text.contains("part A: {a, b}"), "{text}");
    assert!(text.contains("part B: {c, d}"), "{text}");
    assert!(
        text.contains("a: c d c d c d c d  (distance floor 9)"),
        "{text}"
    );
}

#[test]
fn witness_machine_document_carries_the_certificate() {
    let pentagon = corpus("pentagon.toml");
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&racg(&[
        "witness",
        pentagon.to_str().unwrap(),
        "--format",
        "machine",
    ])))
    .unwrap();
    assert_eq!(doc["outcome"], "witness");
    assert_eq!(doc["witness"]["s0"], "4");
    assert_eq!(doc["witness"]["chain"], serde_json::json!(["4"]));
    assert_eq!(doc["witness"]["bound_n"], 3);
    assert_eq!(doc["certification"]["passed"], true);
    assert_eq!(doc["certification"]["density"]["kind"], "dense");
}

#[test]
fn verify_passes_on_the_dihedral_group() {
    let dihedral = corpus("dihedral.toml");
    let out = racg(&["verify", dihedral.to_str().unwrap(), "--radius", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("overall: pass"), "{text}");
    for check in [
        "length-step",
        "descent-clique",
        "singleton-shift",
        "commuting-sandwich",
        "descent-step",
        "max-clique-density",
    ] {
        assert!(text.contains(check), "missing {check}: {text}");
    }
}

#[test]
fn verify_lemma_filter_selects_checks() {
    let dihedral = corpus("dihedral.toml");
    let out = racg(&[
        "verify",
        dihedral.to_str().unwrap(),
        "--radius",
        "4",
        "--lemmas",
        "length-step, descent-clique",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("length-step"), "{text}");
    assert!(!text.contains("commuting-sandwich"), "{text}");

    let out = racg(&[
        "verify",
        dihedral.to_str().unwrap(),
        "--lemmas",
        "no-such-check",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("unknown check `no-such-check`"), "{err}");
    assert!(err.contains("length-step"), "{err}");
}

#[test]
fn ball_cap_environment_variable_exits_three() {
    let pentagon = corpus("pentagon.toml");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_racg"))
        .args(["witness", pentagon.to_str().unwrap()])
        .env("RACG_MAX_BALL_ELEMENTS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err = stderr_of(&out);
    assert!(err.contains("ball cap of 10 elements exceeded"), "{err}");
    assert!(err.contains("radius 1"), "partial progress missing: {err}");
}

#[test]
fn verify_machine_document_lists_check_rows() {
    let pentagon = corpus("pentagon.toml");
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&racg(&[
        "verify",
        pentagon.to_str().unwrap(),
        "--radius",
        "4",
        "--format",
        "machine",
    ])))
    .unwrap();
    assert_eq!(doc["passed"], true);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    for check in checks {
        assert_eq!(check["violations"], 0);
        assert!(check["instances"].as_u64().unwrap() > 0);
    }
}
