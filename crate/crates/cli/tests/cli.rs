use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use oddballoon::graph::{canonical_key, io, make_named, Graph, NamedGraph};
use serde_json::Value;

fn oddballoon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddballoon"))
        .args(args)
        .env_remove("ODDBALLOON_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = oddballoon(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares with `tests/golden/<name>.json`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let got = stdout(args);
    let path = golden_dir().join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(golden_dir()).unwrap();
        fs::write(&path, &got).unwrap();
    }
    let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(got, want, "{name} differs from its golden file");
}

#[test]
fn golden_reports() {
    golden("invariants_path4", &["invariants", "--graph", "path:4"]);
    golden("balloon_star2", &["balloon", "--graph", "star:2", "--t", "5"]);
    golden("decompose_star3", &["decompose", "--graph", "star:3", "--t", "5"]);
    golden("bounds_cycle4", &["bounds", "--graph", "cycle:4", "--t", "5", "--n", "16"]);
    golden("construct_n20", &["construct", "--n", "20", "--q", "1", "--k", "1"]);
    golden("oracle_triangle6", &["oracle", "--n", "6", "--forbid", "triangle"]);
    golden("verify_star2", &["verify", "--corollary", "star", "--a", "2", "--t", "5", "--n", "20"]);
}

fn output(args: &[&str]) -> Value {
    let report: Value = serde_json::from_str(&stdout(args)).unwrap();
    assert_eq!(report["schema"], "oddballoon.report/1");
    assert!(report.get("timing_ms").is_none());
    report["output"].clone()
}

#[test]
fn decompose_star_three() {
    let out = output(&["decompose", "--graph", "star:3", "--t", "5"]);
    assert_eq!(out["family"]["members"].as_array().unwrap().len(), 3);
    assert_eq!(out["profile"]["q_tilde"], 1);
    assert_eq!(out["profile"]["k"], 3);
    assert_eq!(out["profile"]["b_tilde"], serde_json::json!(["@"]));
}

#[test]
fn verify_star_two() {
    let out = output(&["verify", "--corollary", "star", "--a", "2", "--t", "5", "--n", "20"]);
    assert_eq!(out["construction"]["edges"], 101);
    assert_eq!(out["freeness_certified"], true);
    assert_eq!(out["formula_matched"], true);
    assert_eq!(out["passed"], true);
}

#[test]
fn verify_corollary_grid() {
    let cases: &[&[&str]] = &[
        &["--corollary", "star", "--a", "2"],
        &["--corollary", "star", "--a", "3"],
        &["--corollary", "path", "--m", "2"],
        &["--corollary", "path", "--m", "3"],
        &["--corollary", "path", "--m", "4"],
        &["--corollary", "even-cycle", "--m", "4"],
    ];
    for case in cases {
        for n in ["15", "16", "20"] {
            let args = [&["verify"], *case, &["--t", "5", "--n", n]].concat();
            assert_eq!(output(&args)["passed"], true, "{args:?}");
        }
    }
}

#[test]
fn oracle_triangle_six() {
    let out = output(&["oracle", "--n", "6", "--forbid", "triangle"]);
    assert_eq!(out["max_edges"], 9);
    let ext = out["extremal"].as_array().unwrap();
    assert_eq!(ext.len(), 1);
    let g = io::from_graph6(ext[0].as_str().unwrap()).unwrap();
    assert_eq!(canonical_key(&g), canonical_key(&make_named(NamedGraph::Turan { parts: 2, n: 6 }).unwrap()));
}

#[test]
fn exports() {
    let dot = stdout(&["invariants", "--graph", "turan:2,4", "--format", "dot"]);
    assert!(dot.starts_with("graph "));
    assert!(!dot.contains("->"));
    assert_eq!(dot.lines().filter(|l| l.trim().ends_with(';') && !l.contains("--")).count(), 4);
    assert_eq!(stdout(&["invariants", "--graph", "complete:2", "--format", "graph6"]), "A_\n");
    let lines = stdout(&["decompose", "--graph", "star:3", "--t", "5", "--format", "graph6"]);
    assert_eq!(lines.lines().count(), 3);
    let text = stdout(&["bounds", "--graph", "path:4", "--t", "5", "--n", "15", "--format", "text"]);
    assert!(text.contains("lower 63  upper 63  (tight)"));
    let out = oddballoon(&["check-free", "--graph", "path:4", "--forbid", "path:2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn report_round_trips() {
    let text = stdout(&["bounds", "--graph", "star:2", "--t", "5", "--n", "20"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let doc: oddballoon::extremal::BoundsDoc = serde_json::from_value(v["output"].clone()).unwrap();
    assert_eq!((doc.lower, doc.upper), (100, 101));
    let typed: ReportDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&typed).unwrap() + "\n", text);
}

/// The documented report layout.
#[derive(serde::Serialize, serde::Deserialize)]
struct ReportDoc {
    schema: String,
    version: String,
    command: String,
    inputs: Value,
    output: Value,
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| oddballoon(args).status.code();
    assert_eq!(code(&["bounds", "--graph", "path:4", "--t", "3", "--n", "15"]), Some(3));
    assert_eq!(code(&["decompose", "--graph", "star:2", "--t", "3"]), Some(3));
    assert_eq!(code(&["oracle", "--n", "10", "--forbid", "triangle"]), Some(2));
    assert_eq!(code(&["nonsense"]), Some(1));
    assert_eq!(code(&["invariants", "--graph", "star:x"]), Some(1));
    assert_eq!(code(&["invariants", "--graph", "path:3"]), Some(0));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn graph_inputs() {
    let dir = std::env::temp_dir().join(format!("oddballoon-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
    let edges = dir.join("c5.txt");
    fs::write(&edges, io::to_edge_list(&c5)).unwrap();
    let g6 = dir.join("c5.g6");
    fs::write(&g6, io::to_graph6(&c5) + "\n").unwrap();
    let read = |arg: &str| -> Graph {
        let out = output(&["invariants", "--graph", arg]);
        io::from_graph6(out["graph6"].as_str().unwrap()).unwrap()
    };
    assert_eq!(read(edges.to_str().unwrap()), c5);
    assert_eq!(read(g6.to_str().unwrap()), c5);
    assert_eq!(read(&io::to_graph6(&c5)), c5);
    assert_eq!(read("cycle:5"), c5);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lengths_flag() {
    let out = output(&["balloon", "--graph", "star:2", "--t", "5", "--lengths", "5,7"]);
    assert_eq!(out["order"], 3 + 3 + 5);
    let bad = oddballoon(&["balloon", "--graph", "star:2", "--t", "5", "--lengths", "5"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn oracle_cache_is_transparent() {
    let dir = std::env::temp_dir().join(format!("oddballoon-cache-cli-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    let args = ["oracle", "--n", "7", "--forbid", "cycle:4", "--cache-dir", dir.to_str().unwrap()];
    let first = stdout(&args);
    assert_eq!(fs::read_dir(&dir).unwrap().count(), 1);
    let second = stdout(&args);
    assert_eq!(first, second);
    assert_eq!(first, stdout(&args[..5]));
    fs::remove_dir_all(&dir).unwrap();
}
