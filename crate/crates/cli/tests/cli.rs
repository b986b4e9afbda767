use std::process::{Command, Output};

use boxkite_cli::doc::{BoxKiteDoc, PathionDoc, TableDoc};
use boxkite_cli::fixtures::fixture;
use boxkite_core::lariat::switching_yard;
use boxkite_core::{build_box_kite, emanation_assessors, find_box_kites};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxkite")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Markdown body rows as token lists, header and rule dropped.
fn md_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| l.starts_with('|') && !l.starts_with("|---"))
        .skip(1)
        .map(|l| l.replace(", ", ",").split('|').map(str::trim).filter(|c| !c.is_empty()).map(String::from).collect())
        .collect()
}

fn fixture_rows(id: &str) -> Vec<Vec<String>> {
    fixture(id).records().map(|r| r.text.split_whitespace().map(String::from).collect()).collect()
}

#[test]
fn strut_table_markdown_matches_fixture() {
    assert_eq!(md_rows(&stdout(&["emit", "strut-table"])), fixture_rows("strut_table"));
}

#[test]
fn yard_markdown_matches_fixture() {
    assert_eq!(md_rows(&stdout(&["emit", "yard", "--strut", "1"])), fixture_rows("switching_yard"));
}

#[test]
fn yard_json_cells_equal_core_table() {
    let doc: TableDoc = serde_json::from_str(&stdout(&["emit", "yard", "--strut", "1", "--format", "json"])).unwrap();
    let bk = build_box_kite(1).unwrap();
    assert_eq!(doc.cells().unwrap(), switching_yard(&bk).unwrap().rows());
}

#[test]
fn box_kite_json_round_trips() {
    let doc: BoxKiteDoc =
        serde_json::from_str(&stdout(&["emit", "box-kite", "--strut", "1", "--format", "json"])).unwrap();
    assert_eq!(doc.vertices["A"], [3, 10]);
    assert_eq!(doc.edges.len(), 12);
    assert_eq!(doc.to_kite().unwrap(), build_box_kite(1).unwrap());
}

#[test]
fn pathion_json_matches_search() {
    let doc: PathionDoc =
        serde_json::from_str(&stdout(&["emit", "pathion", "--strut", "9", "--format", "json"])).unwrap();
    let assessors: Vec<[u32; 2]> = emanation_assessors(5, 9).unwrap().iter().map(|a| [a.low(), a.high()]).collect();
    assert_eq!(doc.assessors, assessors);
    let kites: Vec<_> = doc.box_kites.iter().map(|k| k.to_kite().unwrap()).collect();
    assert_eq!(kites, find_box_kites(5, 9).unwrap());
    assert_eq!(kites.len(), 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        ["emit", "trip-sync", "--format", "json"].as_slice(),
        &["emit", "census", "--format", "csv"],
        &["verify", "--format", "md"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn every_target_renders_in_every_table_format() {
    for target in boxkite_cli::Target::ALL {
        for format in ["md", "csv", "json"] {
            let out = run(&["emit", target.name(), "--strut", "1", "--format", format]);
            assert!(out.status.success(), "{} {format}: {}", target.name(), String::from_utf8_lossy(&out.stderr));
            assert!(!out.stdout.is_empty());
        }
    }
}

#[test]
fn csv_header_and_rows() {
    let text = stdout(&["emit", "census", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap().iter().next(), Some("s"));
    assert_eq!(reader.records().count(), 16);
}

#[test]
fn dot_graph_names_nodes_by_assessor() {
    let text = stdout(&["emit", "zd-graph", "--strut", "1", "--format", "dot"]);
    assert!(text.starts_with("graph \"zd_4_1\" {"));
    assert!(text.contains("\"3_10\" [label=\"(3, 10)\"];"));
    assert_eq!(text.matches(" -- ").count(), 12);
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("yard.csv");
    let out = run(&["emit", "yard", "--strut", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["emit", "yard", "--strut", "1", "--format", "csv"]));
}

#[test]
fn verify_exits_zero_and_reports_flags() {
    let out = run(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["summary"]["flagged"], 2);
}

#[test]
fn verify_runs_selected_sections() {
    let text = stdout(&["verify", "--sections", "yard,census", "--format", "csv"]);
    assert!(text.lines().skip(1).all(|l| l.starts_with("yard/") || l.starts_with("census/")));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        ["emit", "yard", "--strut", "99"].as_slice(),
        &["emit", "yard", "--bogus"],
        &["emit", "census", "--format", "dot"],
        &["emit", "pathion"],
        &["emit", "box-kite", "--dim", "24"],
        &["verify", "--sections", "nope"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
