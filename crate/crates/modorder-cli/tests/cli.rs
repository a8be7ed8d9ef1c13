//! End-to-end tests against the compiled binary: every documented flow's
//! output shape and exit code.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_modorder"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[track_caller]
fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn catalog_lists_instances_stably() {
    let a = run(&["catalog"]);
    let b = run(&["catalog"]);
    assert_exit(&a, 0);
    assert_eq!(stdout(&a), stdout(&b), "catalog output is stable");
    let text = stdout(&a);
    for name in ["zmod12", "zmod4", "m2z7", "z6"] {
        assert!(text.contains(name), "catalog lists {name}");
    }
}

#[test]
fn order_holds_and_witness_replays_through_a_pipe() {
    let out = run(&["order", "--builtin", "zmod12", "--rel", "mitsch", "--m1", "6", "--m2", "2", "--witness"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "holds: 6 <= 2 [mitsch on zmod12]");
    let witness = lines.next().expect("witness line");
    let cert: serde_json::Value = serde_json::from_str(witness).expect("witness is JSON");
    assert_eq!(cert["relation"], "mitsch");
    assert_eq!(cert["f"], 3, "witness endomorphism is mult-by-3");
    assert_eq!(cert["a"], 3, "witness scalar is 3");

    let mut child = bin()
        .args(["order", "--builtin", "zmod12", "--rel", "mitsch", "--m1", "6", "--m2", "2", "--replay", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawns");
    child.stdin.take().unwrap().write_all(witness.as_bytes()).unwrap();
    let replay = child.wait_with_output().unwrap();
    assert_exit(&replay, 0);
    assert!(stdout(&replay).starts_with("witness verified"));
}

#[test]
fn order_replay_rejects_witness_for_a_different_pair() {
    let out = run(&["order", "--builtin", "zmod12", "--rel", "mitsch", "--m1", "6", "--m2", "2", "--witness"]);
    let text = stdout(&out);
    let witness = text.lines().nth(1).unwrap();
    let mut child = bin()
        .args(["order", "--builtin", "zmod12", "--rel", "mitsch", "--m1", "1", "--m2", "2", "--replay", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawns");
    child.stdin.take().unwrap().write_all(witness.as_bytes()).unwrap();
    let replay = child.wait_with_output().unwrap();
    assert_exit(&replay, 1);
    assert!(stdout(&replay).starts_with("witness rejected"));
}

#[test]
fn order_absent_prints_and_exits_one() {
    let out = run(&["order", "--builtin", "zmod12", "--rel", "minus", "--m1", "6", "--m2", "2"]);
    assert_exit(&out, 1);
    assert_eq!(stdout(&out), "absent: 6 <= 2 [minus on zmod12]\n");
}

#[test]
fn order_is_reflexive_and_supports_index_fallback() {
    let out = run(&["order", "--builtin", "zmod4", "--rel", "mitsch", "--m1", "#3", "--m2", "3"]);
    assert_exit(&out, 0);
    assert!(stdout(&out).starts_with("holds: 3 <= 3"));
}

#[test]
fn order_unknown_element_exits_two() {
    let out = run(&["order", "--builtin", "zmod12", "--rel", "mitsch", "--m1", "99", "--m2", "2"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("unknown element name: 99"));
}

#[test]
fn order_unknown_relation_exits_two() {
    let out = run(&["order", "--builtin", "zmod12", "--rel", "bogus", "--m1", "1", "--m2", "2"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("unknown relation name"));
}

#[test]
fn order_unknown_builtin_exits_two() {
    let out = run(&["order", "--builtin", "nope", "--rel", "mitsch", "--m1", "1", "--m2", "2"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("unknown catalog instance: nope"));
}

#[test]
fn validate_builtin_reports_valid() {
    let out = run(&["validate", "--builtin", "zmod12"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("instance: zmod12"));
    assert!(text.contains("elements: 12"));
    assert!(text.trim_end().ends_with("valid"));
}

#[test]
fn validate_file_roundtrip_and_error_paths() {
    let dir = tempfile::tempdir().unwrap();

    let good = dir.path().join("z2.json");
    std::fs::write(
        &good,
        r#"{"format":1,"scalars":{"kind":"integers","exponent":2},"elements":["0","1"],"add":[[0,1],[1,0]],"action":[[0,0],[0,1]]}"#,
    )
    .unwrap();
    let out = run(&["validate", "--instance", good.to_str().unwrap()]);
    assert_exit(&out, 0);
    assert!(stdout(&out).trim_end().ends_with("valid"));

    // Well-formed JSON whose addition table breaks a group axiom: exit 1.
    let broken = dir.path().join("broken.json");
    std::fs::write(
        &broken,
        r#"{"format":1,"scalars":{"kind":"integers","exponent":2},"elements":["0","1"],"add":[[0,1],[1,1]],"action":[[0,0],[0,1]]}"#,
    )
    .unwrap();
    let out = run(&["validate", "--instance", broken.to_str().unwrap()]);
    assert_exit(&out, 1);
    assert!(stdout(&out).starts_with("invalid:"));

    // Corrupted JSON: schema error, exit 2.
    let corrupt = dir.path().join("corrupt.json");
    std::fs::write(&corrupt, "{\"format\":").unwrap();
    let out = run(&["validate", "--instance", corrupt.to_str().unwrap()]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("schema error"));
}

#[test]
fn validate_requires_exactly_one_source() {
    let out = run(&["validate"]);
    assert_exit(&out, 2);
    let out = run(&["validate", "--builtin", "zmod12", "--instance", "x.json"]);
    assert_exit(&out, 2);
}

#[test]
fn hasse_writes_dot_and_reports_maximal_elements() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("z12.dot");
    let out = run(&["hasse", "--builtin", "zmod12", "--rel", "mitsch", "--dot", dot.to_str().unwrap()]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("maximal elements: 1, 2, 5, 7, 10, 11"));
    assert!(text.contains("lattice: no"));
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("digraph"));
    assert!(dot_text.contains("\"0\""), "every element appears as a node");
}

#[test]
fn hasse_rejects_non_partial_order_naming_the_pair() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("space.dot");
    let out = run(&["hasse", "--builtin", "zmod12", "--rel", "space", "--dot", dot.to_str().unwrap()]);
    assert_exit(&out, 1);
    assert!(stdout(&out).contains("antisymmetry fails at (1, 5)"));
    assert!(!dot.exists(), "no file written on failure");
}

#[test]
fn suite_small_catalog_exits_zero_with_audit_finding_and_stable_report() {
    let dir = tempfile::tempdir().unwrap();
    let rep_a = dir.path().join("a.json");
    let rep_b = dir.path().join("b.json");
    let out = run(&["suite", "--catalog", "zmod4", "--claims", "all", "--report", rep_a.to_str().unwrap()]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("audit-finding  zmod4        Prop-integer-multiples-(1)=>(2)"));
    assert!(text.contains("summary: "));
    assert!(text.contains("0 fails"));

    let out = run(&["suite", "--catalog", "zmod4", "--claims", "all", "--report", rep_b.to_str().unwrap()]);
    assert_exit(&out, 0);
    assert_eq!(
        std::fs::read(&rep_a).unwrap(),
        std::fs::read(&rep_b).unwrap(),
        "reports are byte-identical across runs"
    );
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&rep_a).unwrap()).unwrap();
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["summary"]["audit_findings"], 1);
}

#[test]
fn suite_claim_filter_runs_selected_claims_only() {
    let out = run(&["suite", "--catalog", "zmod12,zmod4", "--claims", "Prop-mitschann"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains("Prop-mitschann")).count(), 2);
    assert!(!text.contains("Prop-mitschdenklik"));
}

#[test]
fn suite_unknown_ids_exit_two() {
    let out = run(&["suite", "--catalog", "zmod4", "--claims", "Bogus-claim"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("unknown claim id"));
    let out = run(&["suite", "--catalog", "atlantis"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("unknown catalog instance"));
}

#[test]
fn search_finds_first_hit_in_catalog_order() {
    let out = run(&["search", "--property", "mitsch-not-jones", "--catalog", "zmod12"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("found: mitsch-not-jones"));
    assert!(text.contains("instance: zmod12"));
    assert!(text.contains("witness: {"));
}

#[test]
fn search_empty_catalog_reports_not_found_with_exit_one() {
    let out = run(&["search", "--property", "mitsch-not-jones", "--catalog", "none"]);
    assert_exit(&out, 1);
    assert!(stdout(&out).contains("not found: mitsch-not-jones (searched 0 instances)"));
}

#[test]
fn search_unknown_property_exits_two_and_help_lists_properties() {
    let out = run(&["search", "--property", "bogus", "--catalog", "zmod4"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("invalid value 'bogus'"));
    let help = run(&["search", "--help"]);
    assert_exit(&help, 0);
    assert!(stdout(&help).contains("mitsch-not-jones"), "help enumerates property ids");
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&[]);
    assert_exit(&out, 2);
    let out = run(&["order", "--builtin", "zmod12"]);
    assert_exit(&out, 2);
}
