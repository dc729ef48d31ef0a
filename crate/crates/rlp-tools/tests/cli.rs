//! End-to-end runs of the `rlp` binary: argument handling, exit codes, and
//! the exact bytes written to stdout, stderr, and files.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn rlp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rlp")).args(args).output().expect("binary runs")
}

fn rlp_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rlp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is text")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is text")
}

fn snapshot_suite() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("vectors")
        .join("snapshot.json")
        .display()
        .to_string()
}

#[test]
fn encode_turns_tree_text_into_hex() {
    let output = rlp(&["encode", r##"[["0x010203",[]],"#255","0x"]"##]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    assert_eq!(stdout(&output), "0xc9c583010203c081ff80\n");
}

#[test]
fn encode_rejects_tree_text_it_cannot_read() {
    for bad in ["{\"a\":1}", "7", "\"#12a\"", "\"0xzz\"", "not json"] {
        let output = rlp(&["encode", bad]);
        assert_eq!(output.status.code(), Some(2), "input {bad:?}");
        assert!(stderr(&output).starts_with("error: "), "input {bad:?}");
        assert_eq!(stdout(&output), "", "input {bad:?}");
    }
}

#[test]
fn decode_turns_hex_back_into_tree_text() {
    let output = rlp(&["decode", "0xc9c583010203c081ff80"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "[[\"0x010203\",[]],\"0xff\",\"0x\"]\n");
}

#[test]
fn decode_reports_rejections_on_stderr_with_exit_one() {
    let output = rlp(&["decode", "0x8105"]);
    assert_eq!(output.status.code(), Some(1));
    assert_eq!(stdout(&output), "");
    let message = stderr(&output);
    assert!(message.contains("NonMinimalSingleByte"), "stderr: {message}");
    assert!(message.contains("offset 0"), "stderr: {message}");
}

#[test]
fn decode_treats_bad_hex_as_a_usage_error() {
    for bad in ["0x810", "0xzz"] {
        let output = rlp(&["decode", bad]);
        assert_eq!(output.status.code(), Some(2), "input {bad:?}");
        assert!(stderr(&output).starts_with("error: "), "input {bad:?}");
    }
    // "" is well-formed hex for the empty byte string, which the decoder
    // then rejects on its own terms.
    let empty = rlp(&["decode", ""]);
    assert_eq!(empty.status.code(), Some(1));
    assert!(stderr(&empty).contains("EmptyInput"));
}

#[test]
fn parse_reports_the_tree_and_the_leftover_bytes() {
    let output = rlp(&["parse", "0x05ff"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "tree: \"0x05\"\nrest: 0xff\n");
}

#[test]
fn check_answers_valid_invalid_or_usage_error() {
    let valid = rlp(&["check", "0xc0"]);
    assert_eq!(valid.status.code(), Some(0));
    assert_eq!(stdout(&valid), "valid\n");

    let invalid = rlp(&["check", "0xc000"]);
    assert_eq!(invalid.status.code(), Some(1));
    assert!(stdout(&invalid).starts_with("invalid: TrailingBytes"), "got {}", stdout(&invalid));

    let garbage = rlp(&["check", "xyz"]);
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn unknown_subcommands_exit_two() {
    let output = rlp(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn stdin_is_the_default_input() {
    let output = rlp_with_stdin(&["decode"], "0xc88363617483646f67\n");
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    assert_eq!(stdout(&output), "[\"0x636174\",\"0x646f67\"]\n");
}

#[test]
fn input_and_output_files_bypass_the_standard_streams() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("tree.txt");
    let output_path = dir.path().join("encoding.hex");
    std::fs::write(&input, "[[],[[]]]\n").unwrap();

    let output = rlp(&[
        "encode",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    assert_eq!(stdout(&output), "");
    assert_eq!(std::fs::read_to_string(&output_path).unwrap(), "0xc3c0c1c0\n");
}

#[test]
fn explicit_input_takes_priority_over_the_positional_value() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("tree.txt");
    std::fs::write(&input, "\"0x0102\"").unwrap();

    let output = rlp(&["encode", "[]", "--input", input.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "0x820102\n");
}

#[test]
fn conformance_passes_the_bundled_snapshot() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("snapshot.report.json");
    let output =
        rlp(&["conformance", &snapshot_suite(), "--report", report_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));

    let printed = stdout(&output);
    assert!(printed.contains("PASS worked_example"), "stdout: {printed}");
    assert!(printed.contains("30 cases: 30 passed, 0 failed"), "stdout: {printed}");
    assert!(!printed.contains("FAIL"), "stdout: {printed}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["failed"], 0);
    assert_eq!(report["total"], 30);
}

#[test]
fn conformance_failures_exit_one_and_land_in_the_default_report() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("bad.json");
    std::fs::write(
        &suite,
        r#"{"wrong_expectation": {"in": "dog", "out": "0xc0"},
           "fine": {"in": [], "out": "0xc0"}}"#,
    )
    .unwrap();

    let output = rlp(&["conformance", suite.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let printed = stdout(&output);
    assert!(printed.contains("FAIL wrong_expectation"), "stdout: {printed}");
    assert!(printed.contains("PASS fine"), "stdout: {printed}");
    assert!(printed.contains("2 cases: 1 passed, 1 failed"), "stdout: {printed}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("bad.report.json")).unwrap())
            .unwrap();
    assert_eq!(report["failed"], 1);
}

#[test]
fn conformance_on_a_missing_suite_is_a_usage_error() {
    let output = rlp(&["conformance", "/nonexistent/suite.json"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).starts_with("error: "));
}
