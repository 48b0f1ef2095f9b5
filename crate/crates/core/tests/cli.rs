//! End-to-end tests of the command-line binary: output content,
//! determinism, exit codes, and JSON schema round trips.

use std::process::{Command, Output};

use apolar::classify::K4Report;
use apolar::report::{AnalysisReport, JordanReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn analyze_the_running_example() {
    let text = stdout(&["analyze", "--dual", "X1*X2*X3*X4^2"]);
    assert!(text.contains("Hilbert function: (1,4,7,7,4,1)"));
    assert!(text.contains("minimal generator degrees: [2, 2, 2, 3]"));
    assert!(text.contains("|total: 1 4 6 4 1|"));
    assert!(text.contains("exact SLP decision: holds"));
    assert!(text.contains("Jordan type of the certified witness: (6,4,4,4,2,2,2)"));
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "analyze",
        "--dual",
        "X1*X2*X3*X4^2",
        "--seed",
        "41",
        "--trials",
        "3",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let json_args = [
        "analyze",
        "--dual",
        "X1*X2*X3*X4^2",
        "--seed",
        "41",
        "--format",
        "json",
    ];
    assert_eq!(run(&json_args).stdout, run(&json_args).stdout);
}

#[test]
fn analyze_json_round_trips() {
    let text = stdout(&[
        "analyze", "--dual", "X1*X2*X3", "--ell", "1,2,3", "--format", "json",
    ]);
    let report: AnalysisReport = serde_json::from_str(&text).expect("valid report JSON");
    assert_eq!(report.n, 3);
    assert_eq!(report.hilbert_function.values(), &[1, 3, 3, 1]);
    assert_eq!(report.betti_totals, vec![1, 3, 3, 1]);
    assert!(report.lefschetz.certificate.holds);
    let e = report
        .requested_ell
        .as_ref()
        .expect("requested form report");
    assert!(e.slp);
    let reprinted = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(text.trim_end(), reprinted);
}

#[test]
fn jordan_type_from_an_ideal() {
    let text = stdout(&[
        "jordan",
        "--ideal",
        "x1^2,x2^2,x3*x4,x3^3-x4^3",
        "--socle",
        "5",
        "--ell",
        "1,1,1,1",
        "--format",
        "json",
    ]);
    let report: JordanReport = serde_json::from_str(&text).expect("valid report JSON");
    assert_eq!(report.ell.jordan, vec![6, 4, 4, 4, 2, 2, 2]);
    assert!(report.strong_lefschetz);
    assert_eq!(report.hilbert_function.values(), &[1, 4, 7, 7, 4, 1]);
}

#[test]
fn classify_k4_reports_the_unique_survivor() {
    let text = stdout(&["classify", "k4", "--bound", "12", "--format", "json"]);
    let report: K4Report = serde_json::from_str(&text).expect("valid report JSON");
    assert_eq!(report.survivor_count, 1);
    let t = report.survivors[0];
    assert_eq!((t.b, t.c, t.d, t.e, t.f), (8, 3, 0, 0, 0));
    let human = stdout(&["classify", "k4", "--bound", "12"]);
    assert!(human.contains("survivors: 1"));
    assert!(human.contains("(b,c,d,e,f)=(8,3,0,0,0)"));
}

#[test]
fn classify_tables_lists_nine_consistent_tables() {
    let text = stdout(&["classify", "tables"]);
    assert!(text.contains("9 tables"));
    assert!(text.contains("all symmetric: yes"));
    assert!(text.contains("all Hilbert-consistent: yes"));
    assert!(text.contains("strictly comparable pairs: 27"));
}

#[test]
fn classify_ci_defaults_to_the_socle_five_case() {
    let text = stdout(&["classify", "ci"]);
    assert!(text.contains("degrees [2, 2, 2, 3]: H = (1,4,7,7,4,1)"));
    assert!(text.contains("|total: 1 4 6 4 1|"));
}

#[test]
fn classify_equigenerated_excludes_the_quadric_template() {
    let text = stdout(&["classify", "equigenerated"]);
    assert!(text.contains("quadric template solutions (k,a,b,e): [[6, 4, 2, 1]]"));
    assert!(text.contains("socle degree 4, so the quadric template is excluded"));
    assert!(text.contains("|total: 1 10 18 10 1|"));
}

#[test]
fn bounds_command_reports_violations_without_failing() {
    let ok = stdout(&["bounds", "--hvector", "1,4,7,7,4,1"]);
    assert!(ok.contains("valid O-sequence"));
    let bad = stdout(&["bounds", "--hvector", "1,2,5"]);
    assert!(bad.contains("degree 2: value 5 exceeds bound 3"));
}

#[test]
fn dual_command_recovers_the_generator() {
    let text = stdout(&["dual", "--ideal", "x1^2,x2^2,x3^2", "--socle", "3"]);
    assert!(text.contains("dual generator: X1*X2*X3"));
    assert!(text.contains("Hilbert function: (1,3,3,1)"));
}

#[test]
fn input_errors_exit_with_code_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["analyze", "--dual", "X1*X2+"],
        vec!["analyze", "--dual", "X1*X2*X3", "--ell", "0,0,0"],
        vec!["analyze", "--dual", "X1*X2*X3", "--ell", "1,1"],
        vec!["analyze", "--dual", "X1*X2*X3", "--trials", "0"],
        vec!["analyze", "--ideal", "x1^2,x2^2", "--socle", "9"],
        vec!["dual", "--ideal", "x1^2,x2^2,x3^2", "--socle", "4"],
        vec!["bounds", "--hvector", "1,4,x"],
        vec!["classify", "k4", "--bound", "3"],
        vec!["classify", "k4", "--skip", "no_such_rule"],
        vec!["jordan", "--dual", "X1*X2", "--ell", "0,0"],
        vec!["analyze", "--dual", "X1+X2^2"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "expected exit 2 for {args:?}, stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("error"),
            "diagnostic expected for {args:?}"
        );
    }
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = run(&["analyze"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "analyze", "--dual", "X1^2", "--ideal", "x1^2", "--socle", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
