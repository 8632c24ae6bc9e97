//! End-to-end runs of the `racg` binary: exit codes, output shapes, golden
//! comparisons, and file-level round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use racg::graph::CoxeterGraph;

fn racg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_racg")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit(out: &Output) -> i32 {
    out.status.code().expect("process exited")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn golden_dir() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").to_string_lossy().into_owned()
}

/// A scratch directory unique to this test process.
fn scratch(label: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("racg-cli-{label}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

#[test]
fn analyze_certifies_the_square() {
    let out = racg(&["analyze", "--graph", &fixture("c4.json")]);
    assert_eq!(exit(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("certified"), "unexpected analyze output: {text}");
}

#[test]
fn analyze_json_carries_the_verdict() {
    let out = racg(&["analyze", "--graph", &fixture("c4.json"), "--json"]);
    assert_eq!(exit(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(value["rigidity"]["certified"], true);
    assert_eq!(value["rigidity"]["certificate"]["criterion"], 1);
}

#[test]
fn normal_form_collapses_a_commuting_square() {
    let out = racg(&["nf", "--graph", &fixture("p3.json"), "--word", "a b a"]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out).trim(), "b");

    let out = racg(&["nf", "--graph", &fixture("p3.json"), "--word", "a b a", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(value["canonical"], "b");
    assert_eq!(value["length"], 1);
    assert_eq!(value["input_was_normal"], false);
}

#[test]
fn unknown_letter_is_an_input_error() {
    let out = racg(&["nf", "--graph", &fixture("p3.json"), "--word", "a z"]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("input error"), "stderr: {}", stderr(&out));
}

#[test]
fn missing_graph_file_is_an_input_error() {
    let out = racg(&["analyze", "--graph", "no-such-file.json"]);
    assert_eq!(exit(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("no-such-file.json"), "stderr should name the file: {err}");
}

#[test]
fn golden_instances_all_match() {
    let dir = golden_dir();
    let c4 = fixture("c4.json");
    let commands: [&[&str]; 6] = [
        &["generate", "k1", "--n", "4"],
        &["generate", "gamma-star", "--graph", &c4, "--depth", "3"],
        &["generate", "k2", "--prefix", "6", "--windows", "2,2"],
        &["generate", "smoothness", "--stages", "3", "--b-count", "5"],
        &["generate", "half-graph", "--k", "3"],
        &["generate", "tits-chain", "--depth", "3"],
    ];
    for base in commands {
        let mut args = base.to_vec();
        args.extend(["--golden", &dir]);
        let out = racg(&args);
        assert_eq!(exit(&out), 0, "{base:?} diverged: {} {}", stdout(&out), stderr(&out));
        assert!(stdout(&out).contains("matches"), "{base:?}: {}", stdout(&out));
    }
}

#[test]
fn golden_mismatch_is_reported_with_exit_one() {
    let dir = scratch("golden-mismatch");
    let good = std::fs::read_to_string(Path::new(&golden_dir()).join("k1-4.json"))
        .expect("golden file exists");
    std::fs::write(dir.join("k1-4.json"), good.replace("c[0,1]", "c[0,9]"))
        .expect("scratch write");
    let out = racg(&["generate", "k1", "--n", "4", "--golden", &dir.to_string_lossy()]);
    assert_eq!(exit(&out), 1);
    assert!(stdout(&out).contains("golden mismatch"), "stdout: {}", stdout(&out));
}

#[test]
fn absent_golden_file_is_an_input_error() {
    let out = racg(&["generate", "k1", "--n", "5", "--golden", &golden_dir()]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("k1-5.json"), "stderr: {}", stderr(&out));
}

#[test]
fn dot_output_reads_back_in() {
    let out = racg(&["generate", "k1", "--n", "4", "--dot"]);
    assert_eq!(exit(&out), 0);
    let path = scratch("dot-roundtrip").join("k1-4.dot");
    std::fs::write(&path, stdout(&out)).expect("scratch write");
    let out = racg(&["analyze", "--graph", &path.to_string_lossy()]);
    assert_eq!(exit(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("certified"));
}

#[test]
fn encode_then_decode_round_trips_through_files() {
    let out = racg(&["logic", "encode", "--graph", &fixture("c4.json"), "--json"]);
    assert_eq!(exit(&out), 0, "stderr: {}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");

    let path = scratch("encode-decode").join("encoded.json");
    std::fs::write(&path, value["graph"].to_string()).expect("scratch write");
    let out = racg(&["logic", "decode", "--graph", &path.to_string_lossy()]);
    assert_eq!(exit(&out), 0, "stderr: {}", stderr(&out));

    let decoded = CoxeterGraph::from_json_str(&stdout(&out)).expect("graph json");
    let original = CoxeterGraph::from_json_str(
        &std::fs::read_to_string(fixture("c4.json")).expect("fixture exists"),
    )
    .expect("fixture parses");
    assert!(decoded.are_isomorphic(&original).expect("small graphs"));
}

#[test]
fn game_verdict_tracks_the_round_count() {
    let c4 = fixture("c4.json");
    let p3 = fixture("p3.json");
    let out = racg(&["logic", "game", "--left", &c4, "--right", &p3, "--rounds", "1"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("survives"), "stdout: {}", stdout(&out));

    let out = racg(&["logic", "game", "--left", &c4, "--right", &p3, "--rounds", "2"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("challenger wins"), "stdout: {}", stdout(&out));
}

#[test]
fn ef_replay_survives_and_renders_the_transcript() {
    let p3 = fixture("p3.json");
    let out = racg(&[
        "logic", "ef", "--left", &p3, "--right", &p3, "--move", "left:a c", "--move",
        "right:b", "--json",
    ]);
    assert_eq!(exit(&out), 0, "stderr: {}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(value["status"]["status"], "ii-survives");
    assert_eq!(value["transcript"]["rounds"][0]["left"], "a c");
}

#[test]
fn degree_law_failures_set_the_exit_code() {
    let out = racg(&["logic", "taxioms", "--graph", &fixture("c4.json")]);
    assert_eq!(exit(&out), 1);
    assert!(stdout(&out).contains("(C) fails"), "stdout: {}", stdout(&out));
}

#[test]
fn unknown_suite_is_an_input_error() {
    let out = racg(&["suite", "nonsense"]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("nonsense"), "stderr: {}", stderr(&out));
}
