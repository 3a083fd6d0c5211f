//! End-to-end runs of the binary against the fixture files in systems/.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.pop();
    path.pop();
    path.push("systems");
    path.push(name);
    path.to_str().unwrap().to_owned()
}

fn coxwords(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxwords"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8(output.stdout.clone())
        .expect("utf-8 stdout")
        .lines()
        .map(str::to_owned)
        .collect()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn enumerating_expressions_of_the_longest_element_prints_all_eight() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "enumerate",
        "expressions",
        "1 2 3 2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 8);
    assert!(lines.contains(&"1 2 3 2".to_owned()));
    assert!(lines.contains(&"3 2 1 2".to_owned()));
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
}

#[test]
fn enumerating_involutions_prints_one_line_per_involution() {
    let out = coxwords(&["--system", &fixture("a3.json"), "enumerate", "involutions"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out).len(), 10);
    let diagnostics = String::from_utf8(out.stderr).unwrap();
    assert!(diagnostics.contains("count: 10"));
}

#[test]
fn a_rank_one_system_has_a_single_expression() {
    let out = coxwords(&[
        "--system",
        &fixture("a1.json"),
        "enumerate",
        "expressions",
        "1",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), vec!["1"]);
}

#[test]
fn connect_reports_the_braid_obstruction() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "connect",
        "2 3 1 2",
        "3 2 1 2",
        "--regime",
        "braid",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout_lines(&out), vec!["not connected under braid"]);
}

#[test]
fn connect_crosses_the_same_gap_with_the_full_move_set() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "connect",
        "2 3 1 2",
        "3 2 1 2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "2 3 1 2");
    assert_eq!(lines.last().unwrap(), "3 2 1 2  [initial I2(3)-id on {s2, s3}]");
}

#[test]
fn connecting_an_expression_to_itself_prints_only_the_start() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "connect",
        "1 2 3 2",
        "1 2 3 2",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), vec!["1 2 3 2"]);
}

#[test]
fn connecting_expressions_of_different_elements_is_an_input_error() {
    let out = coxwords(&["--system", &fixture("a3.json"), "connect", "1", "2"]);
    assert_eq!(exit_code(&out), 2);
    let diagnostics = String::from_utf8(out.stderr).unwrap();
    assert!(diagnostics.contains("different elements"));
}

#[test]
fn maximality_graph_of_the_longest_element_is_the_full_diagram_path() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "--format",
        "dot",
        "graph",
        "1 2 3 2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        dot,
        "graph maximality {\n  \"s1\";\n  \"s2\";\n  \"s3\";\n  \"s1\" -- \"s2\";\n  \"s2\" -- \"s3\";\n}\n"
    );
}

#[test]
fn maximality_graph_under_the_diagram_swap_keeps_only_the_commuting_edge() {
    let out = coxwords(&[
        "--system",
        &fixture("a3-twist.json"),
        "--format",
        "dot",
        "graph",
        "2 1 3 2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.contains("\"s1\" -- \"s3\";"));
    assert!(!dot.contains("\"s1\" -- \"s2\";"));
    assert!(!dot.contains("\"s2\" -- \"s3\";"));
}

#[test]
fn expression_graph_styles_braid_and_half_braid_edges_apart() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "--format",
        "dot",
        "graph",
        "1 2 3 2",
        "--kind",
        "expressions",
    ]);
    assert_eq!(exit_code(&out), 0);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.contains("style=solid"));
    assert!(dot.contains("style=dashed"));
}

#[test]
fn verify_all_emits_parseable_json_and_passes() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "--format",
        "json",
        "verify",
    ]);
    assert_eq!(exit_code(&out), 0);
    let body: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("stdout is a JSON document");
    let reports = body.as_array().expect("one report per applicable suite");
    assert_eq!(reports.len(), 2);
    for report in reports {
        assert_eq!(report["system"], "a3");
        for check in report["checks"].as_array().unwrap() {
            assert_eq!(check["pass"], true);
        }
    }
}

#[test]
fn necessity_passes_on_the_twisted_a3_system() {
    let out = coxwords(&[
        "--system",
        &fixture("a3-twist.json"),
        "verify",
        "--suite",
        "necessity",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("components = 2 pass"));
}

#[test]
fn right_angled_suite_rejects_a_system_with_an_odd_bond() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "verify",
        "--suite",
        "right-angled",
    ]);
    assert_eq!(exit_code(&out), 2);
    let diagnostics = String::from_utf8(out.stderr).unwrap();
    assert!(diagnostics.contains("not right-angled"));
}

#[test]
fn malformed_system_files_exit_with_an_input_error() {
    let dir = std::env::temp_dir().join("coxwords-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("truncated.json");
    std::fs::write(&path, "{\"rank\": 2}").unwrap();
    let out = coxwords(&["--system", path.to_str().unwrap(), "classify"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn classify_names_the_type_and_prints_the_longest_element() {
    let out = coxwords(&["--system", &fixture("a3.json"), "classify"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "A3");
    assert_eq!(lines[1], "longest element: 1 2 1 3 2 1");
}

#[test]
fn classify_reports_the_infinite_component() {
    let out = coxwords(&["--system", &fixture("a2-affine.json"), "classify"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_lines(&out),
        vec!["not finite: component {s1, s2, s3}"]
    );
}

#[test]
fn normalize_reduces_the_word_and_reports_reducedness() {
    let out = coxwords(&["--system", &fixture("a3.json"), "normalize", "1 1 2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_lines(&out), vec!["2"]);
    let diagnostics = String::from_utf8(out.stderr).unwrap();
    assert!(diagnostics.contains("reduced: false"));
}

#[test]
fn theta_override_replaces_the_file_twist() {
    let out = coxwords(&[
        "--system",
        &fixture("a3.json"),
        "--theta",
        "3 2 1",
        "enumerate",
        "involutions",
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 10);
    assert!(lines.contains(&"2 3 2 1".to_owned()));
    assert!(!lines.contains(&"3".to_owned()));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "--system",
        &fixture("b3.json") as &str,
        "--format",
        "json",
        "verify",
    ];
    let first = coxwords(&args);
    let second = coxwords(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}
