//! End-to-end checks of the command-line surface: subcommands, formats,
//! file outputs, and the exit-code contract (0 success, 1 analysis error,
//! 2 usage error).

mod common;

use std::fs;
use std::path::Path;

use fntopo::{AnalysisReport, CodeMode, FiniteFunction};
use tempfile::TempDir;

const SAMPLE: &str = "0 2\n1 2\n2 3\n3 4\n4 5\n5 3\n";

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fntopo").chain(args.iter().copied());
    let code = fntopo::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is utf-8"),
        String::from_utf8(err).expect("stderr is utf-8"),
    )
}

fn write_table(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.display().to_string()
}

#[test]
fn analyze_reports_the_sample_sets() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);

    let (code, out, _) = run(&["analyze", "--table", &table]);
    assert_eq!(code, 0);
    assert!(out.contains("base set: {3,4,5}"));
    assert!(out.contains("generator set: {0,1}"));
    assert!(out.contains("fixed-point set: {}"));
    assert!(out.contains("termination: terminating"));

    let (code, out, _) = run(&["analyze", "--table", &table, "--format", "json"]);
    assert_eq!(code, 0);
    let report = AnalysisReport::from_json(&out).unwrap();
    assert_eq!(report.base_elements, vec![3, 4, 5]);
    assert_eq!(report.generator_elements, vec![0, 1]);
    assert_eq!(report.canonical_code, "((()()))");
}

#[test]
fn analyze_writes_to_a_file_when_asked() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);
    let out_path = dir.path().join("report.json");

    let (code, out, _) = run(&[
        "analyze",
        "--table",
        &table,
        "--format",
        "json",
        "--out",
        &out_path.display().to_string(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let report = AnalysisReport::from_json(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report.base_elements, vec![3, 4, 5]);
}

#[test]
fn analyze_strict_mode_changes_the_code() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);
    let (code, out, _) = run(&[
        "analyze", "--table", &table, "--mode", "strict", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let report = AnalysisReport::from_json(&out).unwrap();
    assert_eq!(report.code_mode, "strict");
    assert_eq!(report.canonical_code, "3((()()))");
}

#[test]
fn report_json_matches_the_golden_file() {
    let f = FiniteFunction::new([(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
    let report = AnalysisReport::build("sample.txt", &f, CodeMode::ClassLevel);
    let golden = include_str!("golden/sample_report.json");
    assert_eq!(report.to_json(), golden.trim_end());
    // and the golden text decodes with every field intact
    assert_eq!(AnalysisReport::from_json(golden).unwrap(), report);
}

#[test]
fn orbit_traces_the_collatz_descent() {
    let (code, out, _) = run(&[
        "orbit",
        "--builtin",
        "collatz",
        "--start",
        "6",
        "--budget",
        "100",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("trace: 6 3 5 8 4 2 1"));
    assert!(out.contains("outcome: ReachedBase(6)"));
}

#[test]
fn orbit_sweeps_ranges_and_renders_json() {
    let (code, out, _) = run(&[
        "orbit",
        "--builtin",
        "collatz",
        "--start",
        "1..4",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 4);
    assert_eq!(rows[0]["outcome"]["kind"], "reached_base");
}

#[test]
fn orbit_accepts_negative_starts() {
    let (code, out, _) = run(&[
        "orbit",
        "--builtin",
        "split",
        "--start",
        "-2..1",
        "--budget",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("start -2"));
    assert!(out.contains("trace: -2 -3 -4 -5 -6 -7"));
    assert!(out.contains("trace: 0 1 2 3 4 5"));
    assert!(out.contains("BudgetExhausted(5)"));
}

#[test]
fn orbit_on_a_table_reports_the_cycle() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);
    let (code, out, _) = run(&["orbit", "--table", &table, "--start", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("trace: 0 2 3 4 5"));
    assert!(out.contains("EnteredCycle([3 4 5], tail=2)"));
}

#[test]
fn iso_recognizes_a_relabelling() {
    let dir = TempDir::new().unwrap();
    let a = write_table(dir.path(), "a.txt", SAMPLE);
    // same structure under x -> x + 10
    let b = write_table(
        dir.path(),
        "b.txt",
        "10 12\n11 12\n12 13\n13 14\n14 15\n15 13\n",
    );
    let (code, out, _) = run(&["iso", "--table-a", &a, "--table-b", &b]);
    assert_eq!(code, 0);
    assert!(out.contains("isomorphic: yes"));
    assert!(out.contains("{3,4,5} <-> {13,14,15}"));

    let chain = write_table(dir.path(), "c.txt", "0 1\n1 1\n");
    let (code, out, _) = run(&["iso", "--table-a", &a, "--table-b", &chain]);
    assert_eq!(code, 0);
    assert!(out.contains("isomorphic: no"));
    assert!(out.contains("left code:  ((()()))"));
}

#[test]
fn iso_and_rank_render_json() {
    let dir = TempDir::new().unwrap();
    let a = write_table(dir.path(), "a.txt", SAMPLE);
    let b = write_table(
        dir.path(),
        "b.txt",
        "10 12\n11 12\n12 13\n13 14\n14 15\n15 13\n",
    );
    let (code, out, _) = run(&["iso", "--table-a", &a, "--table-b", &b, "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);

    let (code, out, _) = run(&["rank", "--table", &a, "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ranks"]["0"], 2);
    assert_eq!(v["check"], "valid");
}

#[test]
fn orbit_escaping_the_table_is_an_analysis_error() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);
    let (code, _, err) = run(&["orbit", "--table", &table, "--start", "99"]);
    assert_eq!(code, 1);
    assert!(err.contains("escapes the declared domain"));
}

#[test]
fn iso_strict_mode_separates_cycle_lengths() {
    let dir = TempDir::new().unwrap();
    let cycle3 = write_table(dir.path(), "c3.txt", "0 1\n1 2\n2 0\n");
    let point = write_table(dir.path(), "p.txt", "0 0\n");
    let (code, out, _) = run(&["iso", "--table-a", &cycle3, "--table-b", &point]);
    assert_eq!(code, 0);
    assert!(out.contains("isomorphic: yes"));
    let (code, out, _) = run(&[
        "iso",
        "--table-a",
        &cycle3,
        "--table-b",
        &point,
        "--mode",
        "strict",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("isomorphic: no"));
}

#[test]
fn embed_decides_chains_and_respects_the_limit_flag() {
    let dir = TempDir::new().unwrap();
    let chain3 = write_table(dir.path(), "c3.txt", "0 0\n1 0\n2 1\n");
    let chain5 = write_table(dir.path(), "c5.txt", "0 0\n1 0\n2 1\n3 2\n4 3\n");
    let star = write_table(dir.path(), "s.txt", "0 2\n1 2\n2 2\n");

    let (code, out, _) = run(&["embed", "--table-a", &chain3, "--table-b", &chain5]);
    assert_eq!(code, 0);
    assert!(out.contains("embeds: yes"));

    let (code, out, _) = run(&["embed", "--table-a", &star, "--table-b", &chain5]);
    assert_eq!(code, 0);
    assert!(out.contains("embeds: no"));

    let (code, _, err) = run(&[
        "embed",
        "--table-a",
        &chain3,
        "--table-b",
        &chain5,
        "--limit",
        "2",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("embedding search limit"));
}

#[test]
fn embed_limit_environment_override() {
    // run the real binary so the variable never leaks into parallel tests
    let dir = TempDir::new().unwrap();
    let chain3 = write_table(dir.path(), "c3.txt", "0 0\n1 0\n2 1\n");
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_fntopo"))
        .args(["embed", "--table-a", &chain3, "--table-b", &chain3])
        .env("FNTOPO_EMBED_LIMIT", "2")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("limit 2"), "stderr was: {err}");
}

#[test]
fn rank_prints_distances_and_checks_them() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);
    let (code, out, _) = run(&["rank", "--table", &table]);
    assert_eq!(code, 0);
    assert!(out.contains("0: 2"));
    assert!(out.contains("2: 1"));
    assert!(out.contains("3: 0"));
    assert!(out.contains("check: valid"));
}

#[test]
fn term_on_tables_and_builtins() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);
    let (code, out, _) = run(&["term", "--table", &table]);
    assert_eq!(code, 0);
    assert!(out.contains("status: terminating"));
    assert!(out.contains("required base conditions: {3,4,5}"));

    let (code, out, _) = run(&["term", "--builtin", "successor"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: non-terminating"));
    assert!(out.contains("chain: ascending-unbounded"));

    let (code, out, _) = run(&["term", "--builtin", "predecessor"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: terminating"));
    assert!(out.contains("required base conditions: {0}"));

    let (code, out, _) = run(&[
        "term",
        "--builtin",
        "collatz",
        "--start",
        "1..200",
        "--budget",
        "10000",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("status: unknown"));
    assert!(out.contains("200 reached base"));

    let (code, out, _) = run(&["term", "--builtin", "split"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: non-terminating"));
    assert!(out.contains("chain: not-a-chain (two chains, generators {0, -1})"));
}

#[test]
fn term_affine_parameters() {
    let (code, out, _) = run(&["term", "--builtin", "affine", "--a", "2", "--b", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: non-terminating"));

    // a = 0 collapses to a constant map; divergence is not certified
    let (code, out, _) = run(&[
        "term",
        "--builtin",
        "affine",
        "--a",
        "0",
        "--b",
        "3",
        "--start",
        "0..5",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("status: unknown"));

    let (code, _, err) = run(&["term", "--builtin", "affine"]);
    assert_eq!(code, 1);
    assert!(err.contains("affine needs --a"));
}

#[test]
fn recur_evaluates_from_flags_and_files() {
    let (code, out, _) = run(&["recur", "--coeffs", "1,1", "--bases", "0,1", "--n", "10"]);
    assert_eq!(code, 0);
    assert!(out.contains("f(10) = 55"));
    assert!(out.contains("steps: 9"));

    let dir = TempDir::new().unwrap();
    let spec = dir.path().join("fib.rec");
    fs::write(
        &spec,
        "# fibonacci\nmemory 2\nconst 0\ncoeffs 1 1\nbases 0 1\n",
    )
    .unwrap();
    let dot = dir.path().join("indices.dot");
    let (code, out, _) = run(&[
        "recur",
        "--spec",
        &spec.display().to_string(),
        "--n",
        "6",
        "--dot",
        &dot.display().to_string(),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "8");
    assert_eq!(v["steps"], 5);
    let rendered = fs::read_to_string(&dot).unwrap();
    assert!(rendered.contains("digraph"));
    assert!(rendered.contains("label=\"{0}\", peripheries=2"));
}

#[test]
fn recur_accepts_negative_parameters() {
    // f(n) = -1 + 2 f(n-1) - f(n-2), starting 3, 1:
    // f(2) = -1 + 2 - 3 = -2, f(3) = -1 - 4 - 1 = -6
    let (code, out, _) = run(&[
        "recur", "--const", "-1", "--coeffs", "2,-1", "--bases", "3,1", "--n", "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("f(3) = -6"));
}

#[test]
fn recur_validates_its_flags() {
    let (code, _, err) = run(&["recur", "--coeffs", "1,1", "--n", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("--bases"));

    let (code, _, err) = run(&[
        "recur", "--memory", "3", "--coeffs", "1,1", "--bases", "0,1", "--n", "3",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("disagrees"));
}

#[test]
fn export_writes_dot() {
    let dir = TempDir::new().unwrap();
    let table = write_table(dir.path(), "sample.txt", SAMPLE);
    let (code, out, _) = run(&["export", "--table", &table]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph induced_order {"));
    assert_eq!(out.matches(" -> ").count(), 3);

    let target = dir.path().join("forest.dot");
    let (code, _, _) = run(&[
        "export",
        "--table",
        &table,
        "--out",
        &target.display().to_string(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&target).unwrap(), out);
}

#[test]
fn exit_codes_follow_the_contract() {
    // usage errors
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run(&["orbit", "--builtin", "collatz"]); // missing --start
    assert_eq!(code, 2);
    let (code, _, _) = run(&["orbit", "--start", "1"]); // no subject at all
    assert_eq!(code, 2);
    let (code, _, _) = run(&["term"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&[]);
    assert_eq!(code, 2);

    // analysis-domain errors
    let dir = TempDir::new().unwrap();
    let open = write_table(dir.path(), "open.txt", "0 1\n");
    let (code, _, err) = run(&["analyze", "--table", &open]);
    assert_eq!(code, 1);
    assert!(err.contains("image 1 of 0 is not a domain element"));

    let (code, _, err) = run(&["analyze", "--table", "/no/such/file"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    // help is a success
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("analyze"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let bad = write_table(dir.path(), "bad.txt", "0 0\nnot a pair at all\n");
    let (code, _, err) = run(&["analyze", "--table", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"));
}
