use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn magilab(args: &[&str], stdin: Option<&str>) -> Output {
    magilab_env(args, stdin, &[])
}

fn magilab_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_magilab"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.env_remove("MAGILAB_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("magilab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn construct_then_verify() {
    let built = magilab(&["construct", "caterpillar-beta", "--spine", "1,1"], None);
    assert!(built.status.success());
    let verified = magilab(&["verify", "-"], Some(&stdout(&built)));
    assert_eq!(verified.status.code(), Some(0));
    let c = json(&verified);
    assert_eq!(c["k"], 12);
    assert_eq!(c["b"], 2);
    assert_eq!(c["super"], false);
}

#[test]
fn verify_graph_and_labeling_files() {
    let graph = temp_file("p3.json", r#"{"vertex_count":3,"edges":[[0,1],[1,2]]}"#);
    let good = temp_file("good.json", r#"{"vertex_labels":[1,5,2],"edge_labels":[4,3]}"#);
    let out = magilab(&["verify", graph.to_str().unwrap(), good.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["k"], 10);

    let not_magic = temp_file("bad.json", r#"{"vertex_labels":[1,2,3],"edge_labels":[4,5]}"#);
    let out = magilab(&["verify", graph.to_str().unwrap(), not_magic.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["k"], Value::Null);

    let not_bijection = temp_file("dup.json", r#"{"vertex_labels":[1,1,2],"edge_labels":[4,3]}"#);
    let out = magilab(
        &["verify", graph.to_str().unwrap(), not_bijection.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lobster_feasible_set() {
    let graph = magilab(&["gen", "lobster", "-p", "3"], None);
    let path = temp_file("L3.json", &stdout(&graph));
    let out = magilab(&["search", "--graph", path.to_str().unwrap(), "--b", "all"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["feasible_b"], serde_json::json!([0, 7]));
}

#[test]
fn pruning_flag_does_not_change_output() {
    for gen in [
        vec!["gen", "double-star", "1", "2"],
        vec!["gen", "cycle", "-l", "5"],
        vec!["gen", "kmn", "2", "3"],
        vec!["gen", "caterpillar", "--spine", "1,0,2"],
    ] {
        let graph = magilab(&gen, None);
        let path = temp_file(&format!("{}.json", gen.join("_")), &stdout(&graph));
        let path = path.to_str().unwrap();
        for b in ["0", "1", "2", "3", "all"] {
            let pruned = magilab(&["search", "--graph", path, "--b", b], None);
            let plain = magilab(&["search", "--graph", path, "--b", b, "--no-prune"], None);
            assert_eq!(pruned.status.code(), Some(0));
            assert_eq!(stdout(&pruned), stdout(&plain), "{gen:?} b = {b}");
        }
    }
}

#[test]
fn search_report_shape() {
    let path = temp_file("p3-search.json", r#"{"vertex_count":3,"edges":[[0,1],[1,2]]}"#);
    let out = magilab(&["search", "--graph", path.to_str().unwrap(), "--b", "2"], None);
    let report = json(&out);
    assert_eq!(report["b"], 2);
    assert_eq!(report["exhausted"], true);
    assert_eq!(report["constants"], serde_json::json!([10]));
    let first = &report["labelings"][0];
    assert!(first["vertex_labels"].is_array() && first["edge_labels"].is_array());

    let limited = magilab(
        &["search", "--graph", path.to_str().unwrap(), "--b", "2", "--limit", "1"],
        None,
    );
    assert_eq!(json(&limited)["exhausted"], false);
    assert_eq!(json(&limited)["labelings"].as_array().unwrap().len(), 1);
}

#[test]
fn transforms_round_trip() {
    let built = stdout(&magilab(&["construct", "double-star", "2", "2"], None));
    let dualized = magilab(&["transform", "dual", "-"], Some(&built));
    assert!(dualized.status.success());
    let c = json(&magilab(&["verify", "-"], Some(&stdout(&dualized))));
    assert_eq!(c["b"], 3);
    assert_eq!(c["k"], 3 * 12 - 18);
    let back = magilab(&["transform", "dual", "-"], Some(&stdout(&dualized)));
    assert_eq!(json(&back), serde_json::from_str::<Value>(&built).unwrap());

    let starred = stdout(&magilab(&["transform", "lambda-star", "-"], Some(&built)));
    let again = magilab(&["transform", "lambda-star", "-"], Some(&starred));
    assert_eq!(json(&again), serde_json::from_str::<Value>(&built).unwrap());

    let superb = magilab(&["transform", "super", "-"], Some(&built));
    assert_eq!(json(&magilab(&["verify", "-"], Some(&stdout(&superb))))["super"], true);

    let graceful = json(&magilab(&["transform", "graceful", "-"], Some(&built)));
    assert!(graceful["vertex_labeling"]["vertex_labels"].is_array());
}

#[test]
fn transform_precondition_failure() {
    let bundle = r#"{"graph":{"vertex_count":4,"edges":[[0,1],[1,2],[2,3]]},
        "labeling":{"vertex_labels":[1,3,2,5],"edge_labels":[7,6,4]}}"#;
    let out = magilab(&["transform", "lambda-star", "-"], Some(bundle));
    assert_eq!(out.status.code(), Some(1));
    let out = magilab(&["transform", "dual", "-"], Some(bundle));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn suites_pass() {
    for kind in ["closing", "lobster", "double-star"] {
        let out = magilab(&["suite", kind], None);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", stdout(&out));
        assert!(stdout(&out).starts_with("claim"));
    }
    let out = magilab(
        &["suite", "caterpillar", "--max-vertices", "6", "--format", "json"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out);
    assert!(reports.as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));
}

#[test]
fn constant_form() {
    let ok = magilab(&["analyze", "constant-form", "2", "2", "18"], None);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["t"], 6);
    let bad = magilab(&["analyze", "constant-form", "3", "6", "7"], None);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["t"], Value::Null);
}

#[test]
fn usage_errors() {
    assert_eq!(
        magilab(&["gen", "caterpillar", "--spine", "2,x"], None).status.code(),
        Some(2)
    );
    assert_eq!(magilab(&["gen", "cycle", "-l", "2"], None).status.code(), Some(2));
    assert_eq!(
        magilab(&["search", "--graph", "/nonexistent.json"], None).status.code(),
        Some(2)
    );
    assert_eq!(magilab(&["verify", "-"], Some("{not json")).status.code(), Some(2));
    let disconnected = temp_file("2k2.json", r#"{"vertex_count":4,"edges":[[0,1],[2,3]]}"#);
    let out = magilab(&["search", "--graph", disconnected.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_refusal() {
    let graph = stdout(&magilab(&["gen", "lobster", "-p", "3"], None));
    let path = temp_file("L3-budget.json", &graph);
    let out = magilab_env(
        &["search", "--graph", path.to_str().unwrap(), "--b", "all"],
        None,
        &[("MAGILAB_BUDGET", "10")],
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("search refused"));
}

#[test]
fn dot_export() {
    let out = magilab(
        &["construct", "caterpillar-beta", "--spine", "1,1", "--format", "dot"],
        None,
    );
    let dot = stdout(&out);
    assert!(dot.starts_with("graph \"S(1,1)\" {"));
    assert!(dot.contains("--"));
    assert!(dot.contains("label="));
    let table = magilab(&["gen", "cycle", "-l", "5", "--format", "table"], None);
    assert_eq!(table.status.code(), Some(2));
}
