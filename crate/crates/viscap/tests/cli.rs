//! End-to-end exercise of the command-line surface: exit codes, JSON
//! shapes, piped workflows, and byte-level determinism.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_viscap"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .expect("piped stdin")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("process finishes")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout not JSON ({}): {}", e, String::from_utf8_lossy(&out.stdout))
    })
}

const H_MEMBER: &str = "6 4\n0 2\n1 3\n3 5\n0 4\n";
const HOLE5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn check_reports_failures_with_witnesses() {
    let out = run_with_stdin(&["check", "-"], H_MEMBER);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["h_free"], Value::Bool(false));
    assert_eq!(v["capped"], Value::Bool(false));
    assert_eq!(v["ordered_hole_free"], Value::Bool(true));
    assert_eq!(v["witnesses"]["h_obstruction"]["u"], 0);
    assert_eq!(v["witnesses"]["h_obstruction"]["v"], 3);
}

#[test]
fn check_passes_clean_graphs() {
    let out = run_with_stdin(&["check", "-"], K4);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["h_free"], Value::Bool(true));
    assert_eq!(v["ordered_hole_free"], Value::Bool(true));
    assert_eq!(v["capped"], Value::Bool(true));
}

#[test]
fn check_requested_subset_only() {
    // the hole fails only the hole check; requesting capped alone passes
    let out = run_with_stdin(&["check", "--capped", "-"], HOLE5);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["capped"], Value::Bool(true));
    assert!(v.get("h_free").is_none());

    let out = run_with_stdin(&["check", "--ordered-hole-free", "-"], HOLE5);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_outerplanar_flag() {
    let out = run_with_stdin(&["check", "--outerplanar", "-"], "4 2\n0 2\n1 3\n");
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["outerplanar"], Value::Bool(false));
    assert_eq!(v["witnesses"]["crossing_pair"]["e"], serde_json::json!([0, 2]));
}

#[test]
fn malformed_input_exits_two() {
    let out = run_with_stdin(&["check", "-"], "3 1\n0 9\n");
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert!(v["error"]["message"].as_str().unwrap().contains("line"));
}

#[test]
fn clique_command() {
    let out = run_with_stdin(&["clique", "-"], K4);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["omega"], 4);
    assert_eq!(v["method"], "decomposition");
}

#[test]
fn color_capped_on_uncapped_input_exits_three() {
    let out = run_with_stdin(&["color", "--mode", "capped", "-"], "4 2\n0 2\n1 3\n");
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["witness"]["kind"], "capped_violation");
}

#[test]
fn color_hfree_produces_verified_certificate() {
    let out = run_with_stdin(&["color", "--mode", "hfree", "-"], HOLE5);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["proper"], Value::Bool(true));
    assert_eq!(v["omega"], 2);
    assert_eq!(v["bound"], 48);
    assert_eq!(v["class"], "hfree");
    assert!(v["num_colours"].as_u64().unwrap() <= 48);
    assert_eq!(v["colours"].as_array().unwrap().len(), 5);
}

#[test]
fn color_no_verify_leaves_proper_null() {
    let out = run_with_stdin(&["color", "--mode", "hfree", "--no-verify", "-"], HOLE5);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["proper"], Value::Null);
}

#[test]
fn partition_command() {
    let out = run_with_stdin(&["partition", "-"], HOLE5);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["capped_certificates"], Value::Bool(true));
    let total: usize =
        v["parts"].as_array().unwrap().iter().map(|p| p.as_array().unwrap().len()).sum();
    assert_eq!(total, 5);
}

#[test]
fn partition_rejects_h_member() {
    let out = run_with_stdin(&["partition", "-"], H_MEMBER);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["witness"]["kind"], "h_obstruction");
}

#[test]
fn gen_visgraph_check_pipeline() {
    let gen = bin()
        .args(["gen", "polygon", "--n", "12", "--seed", "7", "--span", "500"])
        .output()
        .expect("gen runs");
    assert_eq!(gen.status.code(), Some(0));
    let poly_text = String::from_utf8(gen.stdout).unwrap();
    assert!(poly_text.starts_with("12\n"));

    let vis = run_with_stdin(&["visgraph", "-"], &poly_text);
    assert_eq!(vis.status.code(), Some(0));
    let og_text = String::from_utf8(vis.stdout).unwrap();

    let check = run_with_stdin(&["check", "-"], &og_text);
    assert_eq!(check.status.code(), Some(0), "visibility graph must pass all checks");
    let v = stdout_json(&check);
    assert_eq!(v["h_free"], Value::Bool(true));
    assert_eq!(v["ordered_hole_free"], Value::Bool(true));
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "polygon", "--n", "15", "--seed", "99", "--span", "800"];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn color_output_is_byte_identical() {
    let a = run_with_stdin(&["color", "--mode", "hfree", "-"], HOLE5);
    let b = run_with_stdin(&["color", "--mode", "hfree", "-"], HOLE5);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_round_trip() {
    let colour = run_with_stdin(&["color", "--mode", "capped", "-"], K4);
    assert_eq!(colour.status.code(), Some(0));
    let cert = String::from_utf8(colour.stdout).unwrap();

    let dir = std::env::temp_dir().join(format!("viscap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("k4.og");
    let cert_path = dir.join("k4.json");
    std::fs::write(&graph_path, K4).unwrap();
    std::fs::write(&cert_path, &cert).unwrap();

    let verify = bin()
        .args(["verify", graph_path.to_str().unwrap(), cert_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(0));
    let v = stdout_json(&verify);
    assert_eq!(v["proper"], Value::Bool(true));

    // an improper colouring fails verification with exit 1
    std::fs::write(&cert_path, "[0,0,0,0]").unwrap();
    let verify = bin()
        .args(["verify", graph_path.to_str().unwrap(), cert_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn oracle_commands() {
    let out = run_with_stdin(&["oracle", "clique", "-"], K4);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["omega"], 4);

    let out = run_with_stdin(&["oracle", "chromatic", "-"], HOLE5);
    assert_eq!(stdout_json(&out)["chi"], 3);

    let out = run_with_stdin(&["oracle", "capped", "-"], "4 2\n0 2\n1 3\n");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["witness"]["a"], 0);

    let out = run_with_stdin(&["oracle", "holes", "-"], HOLE5);
    assert_eq!(out.status.code(), Some(1));

    let out = run_with_stdin(&["oracle", "xseq", "--from", "0", "--to", "3", "-"], "4 2\n0 2\n1 3\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["reachable"], Value::Bool(true));

    let out = run_with_stdin(&["oracle", "xseq", "--from", "3", "--to", "0", "-"], "4 2\n0 2\n1 3\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_guard_exits_three() {
    // 17 vertices exceeds the default chromatic guard
    let out = run_with_stdin(&["oracle", "chromatic", "-"], "17 0\n");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn pretty_flag_emits_indented_json() {
    let out = run_with_stdin(&["check", "--pretty", "-"], K4);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\n  "));
    let _: Value = serde_json::from_str(&text).expect("still valid JSON");
}

#[test]
fn duplicate_edges_warn_on_stderr() {
    let out = run_with_stdin(&["check", "-"], "3 2\n0 2\n2 0\n");
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("duplicate"));
}
