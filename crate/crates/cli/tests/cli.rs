use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use cornerkit::io::parse_complex;
use cornerkit::simplicial::{suspension, SimplicialComplex};

fn cornerkit(args: &[&str], stdin: &str) -> Output {
    cornerkit_env(args, stdin, None)
}

fn cornerkit_env(args: &[&str], stdin: &str, data: Option<&PathBuf>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cornerkit"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    match data {
        Some(dir) => cmd.env("CORNERKIT_DATA", dir),
        None => cmd.env_remove("CORNERKIT_DATA"),
    };
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn exit_codes_follow_verdicts() {
    let sphere = cornerkit(&["check-ghs", "-i", "poincare16.json", "-n", "4"], "");
    assert_eq!(sphere.status.code(), Some(0));
    assert_eq!(json(&sphere)["verdict"], Value::Bool(true));

    let rp2 = cornerkit(&["check-ghs", "-i", "rp2_6.json", "-n", "3"], "");
    assert_eq!(rp2.status.code(), Some(1));
    assert_eq!(json(&rp2)["verdict"], Value::Bool(false));

    let missing = cornerkit(&["check-ghs", "-i", "no_such_file.json", "-n", "3"], "");
    assert_eq!(missing.status.code(), Some(2));
    assert!(missing.stdout.is_empty());
}

#[test]
fn malformed_json_reports_position() {
    let out = cornerkit(&["homology"], "{\"facets\": [[0, 1],\n  ]}");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2 column"), "{err}");
}

#[test]
fn constructed_complexes_parse_back() {
    let out = cornerkit(&["construct", "suspension", "-i", "-"], &stdout(&cornerkit(&["construct", "cycle", "5"], "")));
    assert_eq!(out.status.code(), Some(0));
    let doc = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(doc.complex, suspension(&SimplicialComplex::cycle(5)));
}

#[test]
fn join_pipeline_feeds_checks() {
    let tri = cornerkit(&["construct", "boundary-simplex", "2"], "");
    let path = tmpdir("cli").join("triangle.json");
    std::fs::write(&path, &tri.stdout).unwrap();
    let p = path.to_str().unwrap();
    let joined = cornerkit(&["construct", "join", "-i", p, "-i", p], "");
    let out = cornerkit(&["check-ghs", "-n", "4"], &stdout(&joined));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn stdin_is_read_once() {
    let out = cornerkit(&["equiv", "-i", "-", "--other", "-"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn data_directory_overrides_corpus() {
    let dir = tmpdir("data_override");
    std::fs::write(dir.join("rp2_6.json"), stdout(&cornerkit(&["construct", "boundary-simplex", "3"], ""))).unwrap();
    let out = cornerkit_env(&["check-ghs", "-i", "rp2_6.json", "-n", "3"], "", Some(&dir));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn timing_only_on_request() {
    let plain = json(&cornerkit(&["homology", "-i", "rp2_6.json"], ""));
    assert!(plain.get("wall_time_ms").is_none());
    let timed = json(&cornerkit(&["--timing", "homology", "-i", "rp2_6.json"], ""));
    assert!(timed.get("wall_time_ms").is_some());
}

#[test]
fn text_format_leads_with_verdict() {
    let out = cornerkit(&["--format", "text", "check-charfun", "-i", "cp2_pair.json"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS check-charfun"));
    let bad = r#"{"n": 2, "lambda": [[2, 0], [0, 1], [-1, -1]], "nerve": {"facets": [[0, 1], [0, 2], [1, 2]]}}"#;
    let out = cornerkit(&["--format", "text", "check-charfun"], bad);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL check-charfun"));
}

#[test]
fn singular_fan_is_an_error() {
    let fan = r#"{"rays": [[2, 1], [0, 1], [-1, -1]], "cones": [[0, 1], [1, 2], [0, 2]]}"#;
    assert_eq!(cornerkit(&["from-fan"], fan).status.code(), Some(2));
}

#[test]
fn all_two_triangle_names_its_witness() {
    let tri = stdout(&cornerkit(&["construct", "boundary-simplex", "2"], ""));
    let out = cornerkit(&["check-aspherical", "--uniform-label", "2"], &tri);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"]["witness"], serde_json::json!([0, 1, 2]));
}
