use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const FIXTURE: &str = r#"{
  "roads": {
    "horizontal": [{"dir": 1, "offset": 0}, {"dir": 0, "offset": 1}],
    "vertical": [{"dir": 0, "offset": 0}, {"dir": 1, "offset": 1}]
  },
  "vehicles": [
    {"start_time": "0", "speed": "1", "path": [[1, 1], [1, 2]]},
    {"start_time": "1", "speed": "1", "path": [[1, 2], [2, 2]]}
  ]
}"#;

fn owrn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_owrn")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn validate_and_connectivity() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "s.json", FIXTURE);
    let out = owrn(&["validate", &file]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ok: 2x2 network, 2 vehicles\n");

    let out = owrn(&["connectivity", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("strongly connected: true"));

    let acyclic = FIXTURE.replace("{\"dir\": 0, \"offset\": 1}", "{\"dir\": 1, \"offset\": 1}");
    let file = write(&dir, "acyclic.json", &acyclic);
    assert_eq!(owrn(&["connectivity", &file]).status.code(), Some(2));
}

#[test]
fn simulate_reports_one_collision() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "s.json", FIXTURE);
    let out = owrn(&["simulate", &file, "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["events"][0]["car_a"], 1);
    assert_eq!(report["events"][0]["vertex"], serde_json::json!([1, 2]));
    assert_eq!(report["events"][0]["time"], "1");

    let dot = stdout(&owrn(&["simulate", &file, "--dot"]));
    assert!(dot.contains("c1 -- c2;"));
}

#[test]
fn solve_keeps_one_car() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "s.json", FIXTURE);
    let exact: serde_json::Value = serde_json::from_slice(&owrn(&["solve", &file, "--exact", "--json"]).stdout).unwrap();
    assert_eq!(exact["selected"], serde_json::json!([1]));
    assert_eq!(exact["method"], "exact-search");
    for flag in ["--exact", "--bipartite", "--auto"] {
        let out = owrn(&["solve", &file, flag, "--json"]);
        assert!(out.status.success(), "{flag}");
        let solution: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(solution["size"], 1);
        assert_eq!(solution["selected"].as_array().unwrap().len(), 1);
    }
}

#[test]
fn reduce_writes_scenario_and_verifies() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "g.json", r#"{"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}"#);
    let out_path = dir.path().join("out.json");
    let out = owrn(&["reduce", "--graph", &graph, "--verify", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
    let scenario = out_path.to_str().unwrap();
    let sim: serde_json::Value = serde_json::from_slice(&owrn(&["simulate", scenario, "--json"]).stdout).unwrap();
    assert_eq!(sim["events"].as_array().unwrap().len(), 3);
    let solution: serde_json::Value = serde_json::from_slice(&owrn(&["solve", scenario, "--json"]).stdout).unwrap();
    assert_eq!(solution["size"], 2);

    let bad = owrn(&["reduce", "--graph", &graph, "--delta", "7"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn shortest_with_and_without_turn_budget() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "s.json", FIXTURE);
    let out = owrn(&["shortest", &file, "--from", "1,2", "--to", "1,1", "--json"]);
    let path: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(path["length"], 3);
    assert_eq!(path["turns"], serde_json::json!(["left", "left"]));

    let out = owrn(&["shortest", &file, "--from", "1,2", "--to", "1,1", "--max-turns", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = owrn(&["shortest", &file, "--from", "9,9", "--to", "1,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.json", "{\"roads\": [");
    let out = owrn(&["validate", &file]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    assert_eq!(owrn(&["validate", "/nonexistent/file.json"]).status.code(), Some(1));
    assert!(!Path::new("/nonexistent/file.json").exists());
}

#[test]
fn export_dot_network() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "s.json", FIXTURE);
    let dot = stdout(&owrn(&["export-dot", &file]));
    assert!(dot.starts_with("digraph owrn {"));
    assert!(dot.contains("v1_1 -> v1_2;"));
    let conflicts = stdout(&owrn(&["export-dot", &file, "--conflicts"]));
    assert!(conflicts.starts_with("graph conflicts {"));
}
