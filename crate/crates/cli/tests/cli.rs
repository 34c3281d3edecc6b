use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lapctrl"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (key, value) in env {
        cmd.env(key, value);
    }
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    let mut child = cmd.spawn().expect("spawn lapctrl");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    let out = child.wait_with_output().expect("wait for lapctrl");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lapctrl-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn build_emits_graph_json() {
    let out = run(&["build", "--string", "0011000101"], None, &[]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["k"], 11);
    assert_eq!(json["string"], "0011000101");
    assert_eq!(
        json["degrees"],
        serde_json::json!([10, 9, 6, 6, 4, 4, 4, 2, 2, 2, 1])
    );
    assert_eq!(json["laplacian"][0][0], 10);
}

#[test]
fn build_rejects_non_threshold_degrees() {
    let out = run(&["build", "--degrees", "5,2,2,2,1,1"], None, &[]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("not a threshold"), "stderr: {}", out.stderr);
}

#[test]
fn build_accepts_threshold_degrees() {
    let out = run(&["build", "--degrees", "5,3,2,2,1,1"], None, &[]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["string"], "01001");
}

#[test]
fn eigvecs_star_is_exact() {
    let out = run(&["eigvecs", "--string", "001"], None, &[]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout.trim(),
        r#"{"eigenvalues":[4,1,1,0],"V":[[3,0,0,1],[-1,-1,-1,1],[-1,1,-1,1],[-1,0,2,1]]}"#
    );
}

#[test]
fn build_output_round_trips_into_eigvecs_and_check() {
    let built = run(&["build", "--string", "00110001"], None, &[]);
    let graph_file = temp_file("graph.json", &built.stdout);
    let via_file = run(&["eigvecs", "--input", graph_file.to_str().unwrap()], None, &[]);
    let via_string = run(&["eigvecs", "--string", "00110001"], None, &[]);
    assert_eq!(via_file.stdout, via_string.stdout);
    let via_stdin = run(&["eigvecs", "--input", "-"], Some(&built.stdout), &[]);
    assert_eq!(via_stdin.stdout, via_string.stdout);

    let design = run(&["design", "--input", graph_file.to_str().unwrap(), "--kind", "binary"], None, &[]);
    assert_eq!(design.code, 0);
    let b_file = temp_file("b.json", &design.stdout);
    let check = run(
        &["check", "--input", graph_file.to_str().unwrap(), "--B", b_file.to_str().unwrap()],
        None,
        &[],
    );
    assert_eq!(check.code, 0, "stderr: {}", check.stderr);
    let json: serde_json::Value = serde_json::from_str(&check.stdout).unwrap();
    assert_eq!(json["controllable"], true);
    assert_eq!(json["method"], "all");
}

#[test]
fn graph_json_accepts_bit_array_strings() {
    let graph_file = temp_file("bits.json", r#"{"string": [0,0,1]}"#);
    let out = run(&["build", "--input", graph_file.to_str().unwrap()], None, &[]);
    assert_eq!(out.code, 0);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["string"], "001");
}

#[test]
fn check_reports_uncontrollable_with_exit_one() {
    let b_file = temp_file("star-b.json", r#"{"kind":"binary","B":[[1],[0],[0],[0]]}"#);
    for method in ["local-rank", "pbh", "kalman", "all"] {
        let out = run(
            &["check", "--string", "001", "--B", b_file.to_str().unwrap(), "--method", method],
            None,
            &[],
        );
        assert_eq!(out.code, 1, "method {method}, stderr: {}", out.stderr);
        let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(json["controllable"], false);
        assert_eq!(json["min_controllers"], serde_json::json!({"binary": 2, "terminal": 2}));
        match method {
            "local-rank" => assert_eq!(json["failing_substring"], "001"),
            "pbh" => assert!(json["witness"].is_array()),
            _ => {}
        }
    }
}

#[test]
fn check_accepts_rational_general_matrices() {
    let b_file = temp_file(
        "rational-b.json",
        r#"{"kind":"general","B":[["1/2",0],[0,"2/3"],[0,1],[1,0]]}"#,
    );
    let out = run(&["check", "--string", "001", "--B", b_file.to_str().unwrap()], None, &[]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
}

#[test]
fn check_rejects_malformed_control_matrices() {
    let bad_json = temp_file("bad-b.json", "{ not json");
    let out = run(&["check", "--string", "001", "--B", bad_json.to_str().unwrap()], None, &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("bad JSON"));

    let bad_kind = temp_file("bad-kind.json", r#"{"kind":"binary","B":[[2],[0],[0],[0]]}"#);
    let out = run(&["check", "--string", "001", "--B", bad_kind.to_str().unwrap()], None, &[]);
    assert_eq!(out.code, 2);

    let bad_shape = temp_file("bad-shape.json", r#"{"kind":"binary","B":[[1],[0]]}"#);
    let out = run(&["check", "--string", "001", "--B", bad_shape.to_str().unwrap()], None, &[]);
    assert_eq!(out.code, 2);
}

#[test]
fn design_terminal_matches_minimum() {
    let out = run(&["design", "--string", "0011000101", "--kind", "terminal"], None, &[]);
    assert_eq!(out.code, 0);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["kind"], "terminal");
    assert_eq!(json["B"].as_array().unwrap().len(), 11);
    assert_eq!(json["B"][2][0], 1);
}

#[test]
fn combine_certifies_and_reports_stats() {
    let out = run(&["combine", "--k", "8", "--certify"], None, &[]);
    assert_eq!(out.code, 0);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["bridge"], serde_json::json!([1, 6]));
    assert_eq!(json["certified_distinct"], true);
    assert_eq!(json["stats"], serde_json::json!({"diameter": 4, "max_degree": 4}));

    let plain = run(&["combine", "--k", "8"], None, &[]);
    let json: serde_json::Value = serde_json::from_str(&plain.stdout).unwrap();
    assert!(json.get("certified_distinct").is_none());

    let too_small = run(&["combine", "--k", "3"], None, &[]);
    assert_eq!(too_small.code, 2);
}

#[test]
fn stats_of_antiregular_graph() {
    let out = run(&["stats", "--string", "0101"], None, &[]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), r#"{"diameter":2,"max_degree":4}"#);
}

#[test]
fn sweep_respects_the_environment_cap() {
    let out = run(&["sweep", "--max-k", "9"], None, &[("THRESHOLD_CTRL_MAX_K", "5")]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["max_k"], 5);
    assert_eq!(json["ok"], true);
    assert_eq!(json["rows"].as_array().unwrap().len(), 4);

    let bad_cap = run(&["sweep"], None, &[("THRESHOLD_CTRL_MAX_K", "many")]);
    assert_eq!(bad_cap.code, 2);
}

#[test]
fn graph_source_is_required_and_exclusive() {
    let neither = run(&["build"], None, &[]);
    assert_eq!(neither.code, 2);
    let both = run(&["build", "--string", "01", "--degrees", "2,1,1"], None, &[]);
    assert_eq!(both.code, 2);
}
