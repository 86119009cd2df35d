use std::io::Write;
use std::process::{Command, Output, Stdio};

use monodromy_cli::{cmd_invariants, cmd_sweep, cmd_theorem1, cmd_tower_search, Status};
use monodromy_core::group::DEFAULT_GROUP_BOUND;
use serde_json::Value;

fn run(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monodromy"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn invariants_examples() {
    let winding = r#"{"degree": 2, "branch": ["(0 1)", "(0 1)"]}"#;
    let r = report(&run(&["invariants"], winding, &[]));
    assert_eq!(r["results"]["chi_normalization"], 2);
    assert_eq!(r["results"]["is_normal"], true);

    let s3 = r#"{"degree": 3, "branch": ["(0 1)", "(1 2)", "(0 1 2)"]}"#;
    let r = cmd_invariants(s3, DEFAULT_GROUP_BOUND).unwrap();
    assert_eq!(r.results["chi_normalization"], 2);
    assert_eq!(r.results["is_normal"], false);
    let fields: Vec<&str> = r.results.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        fields,
        [
            "degree",
            "branch_count",
            "monodromy_order",
            "local_orders",
            "chi_normalization",
            "genus_normalization",
            "is_normal",
            "chi_domain",
            "local_degrees"
        ]
    );
}

#[test]
fn exit_codes() {
    let malformed = r#"{"degree": 3, "branch": ["(0 1", "(1 2)"]}"#;
    assert_eq!(run(&["invariants"], malformed, &[]).status.code(), Some(1));
    assert_eq!(run(&["invariants"], "not json", &[]).status.code(), Some(1));
    let not_identity = r#"{"degree": 3, "branch": ["(0 1)", "(1 2)"]}"#;
    let out = run(&["invariants"], not_identity, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not the identity"));
    let intransitive = r#"{"degree": 4, "branch": ["(0 1)", "(0 1)"]}"#;
    let out = run(&["invariants"], intransitive, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not transitive"));
    assert_eq!(run(&["theorem1", "1", "2"], "", &[]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--n-max", "6", "--k-max", "2"], "", &[]).status.code(), Some(2));
}

#[test]
fn group_bound_from_environment() {
    let out = run(&["theorem1", "2", "2"], "", &[("MONODROMY_GROUP_BOUND", "4")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound of 4"));
}

#[test]
fn theorem1_two_three() {
    let r = cmd_theorem1(2, 3, DEFAULT_GROUP_BOUND).unwrap();
    assert!(r.all_verified(), "{:#?}", r.verdicts);
    assert_eq!(r.results["invariants"]["monodromy_order"], 24);
}

#[test]
fn sweep_examples() {
    let r = cmd_sweep(2, 4, false, DEFAULT_GROUP_BOUND).unwrap();
    assert!(r.all_verified());
    let buckets = r.results["buckets"].as_array().unwrap();
    assert!(buckets
        .iter()
        .any(|b| b["branch_count"] == 4 && b["genus"] == 1 && b["count"].as_u64() > Some(0)));
    for (n, k) in [(3, 3), (4, 4)] {
        let r = cmd_sweep(n, k, false, DEFAULT_GROUP_BOUND).unwrap();
        assert!(r.all_verified(), "({n},{k})");
    }
}

#[test]
fn tower_search_examples() {
    let r = cmd_tower_search(3, DEFAULT_GROUP_BOUND).unwrap();
    let degrees: Vec<&Value> = r.verdicts.iter().map(|v| &v.witness["branch_data"]["degree"]).collect();
    assert_eq!(degrees, [2, 3]);
    let r = cmd_tower_search(2, DEFAULT_GROUP_BOUND).unwrap();
    assert_eq!(r.verdicts[0].status, Status::Verified);
    assert_eq!(r.verdicts[1].status, Status::Inconclusive);
    assert_eq!(r.results[1]["found"], Value::Null);
}

#[test]
fn complex_commands() {
    let circle = r#"{"simplices": [[0, 1], [1, 2], [0, 2]]}"#;
    let r = report(&run(&["homology"], circle, &[]));
    assert_eq!(r["results"]["homology"]["betti"], serde_json::json!([1, 1]));

    let two_points = r#"{"simplices": [[0], [1]]}"#;
    let r = report(&run(&["suspend"], two_points, &[]));
    assert_eq!(r["results"]["homology"]["betti"], serde_json::json!([1, 1]));
    assert!(r["verdicts"].as_array().unwrap().iter().all(|v| v["status"] == "verified"));

    let bad = r#"{"simplices": [[0, 0]]}"#;
    assert_eq!(run(&["homology"], bad, &[]).status.code(), Some(2));
}

#[test]
fn summary_mode() {
    let out = run(&["--json", "false", "theorem1", "2", "2"], "", &[]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "theorem1: 5 verdicts, 0 refuted");
}
