use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-blocks")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn block_sizes(v: &Value) -> Vec<usize> {
    v["blocks"].as_array().unwrap().iter().map(|b| b.as_array().unwrap().len()).collect()
}

#[test]
fn blocks_r1_examples() {
    let v = json(&["blocks-r1", "--n", "2", "--r", "1", "--h", "1/2"]);
    assert_eq!(v["kind"], "g_r1n");
    assert_eq!(v["blocks"], serde_json::json!([[[[2]], [[1, 1]]]]));
    assert_eq!(block_sizes(&json(&["blocks-r1", "--n", "2", "--r", "1", "--h", "1/5"])), vec![1, 1]);
    let v = json(&["blocks-r1", "--n", "0", "--r", "1", "--h", "1/2"]);
    assert_eq!(v["blocks"], serde_json::json!([[[[]]]]));
}

#[test]
fn blocks_rpn_examples() {
    let v = json(&["blocks-rpn", "--n", "2", "--r", "2", "--p", "2", "--h", "1/2"]);
    assert_eq!((v["kind"].as_str(), v["p"].as_u64(), v["d"].as_u64()), (Some("g_rpn"), Some(2), Some(1)));
    assert_eq!(block_sizes(&v), vec![4]);
    assert_eq!(v["blocks"][0][3], serde_json::json!({"rep": [[1], [1]], "j": 1, "period": 1}));
    assert_eq!(block_sizes(&json(&["blocks-rpn", "--n", "2", "--r", "2", "--p", "2", "--h", "1/5"])), vec![1; 4]);
    assert_eq!(block_sizes(&json(&["blocks-rpn", "--n", "1", "--r", "2", "--p", "2", "--h", "1/2"])), vec![1]);
}

#[test]
fn k_values_and_negative_rationals() {
    let v = json(&["blocks-r1", "--n", "2", "--r", "3", "--h", "-1/2", "--k", "1/3,-2/5"]);
    assert_eq!(v["params"], serde_json::json!({"h": "-1/2", "k": ["1/3", "-2/5"]}));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["blocks-rpn", "--n", "2", "--r", "3", "--p", "2", "--h", "1/2"],
        vec!["blocks-r1", "--n", "2", "--r", "1", "--h", "1/0"],
        vec!["blocks-r1", "--n", "2", "--r", "2", "--h", "1/2", "--k", "1/2,1/3"],
        vec!["blocks-r1", "--n", "2"],
        vec!["verify", "shift", "--h", "1/2"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_commands_pass() {
    let v = json(&["verify", "lm", "--max-n", "4", "--max-r", "2", "--max-den", "4"]);
    assert_eq!((v["pass"].as_bool(), v["instances"].as_u64()), (Some(true), Some(5 * 42)));
    let v = json(&["verify", "shift", "--n", "3", "--r", "4", "--p", "2", "--h", "1/3"]);
    assert_eq!(v["pass"], true);
    let v = json(&["verify", "claim", "--max-n", "4", "--max-r", "4", "--max-den", "6"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = ["blocks-rpn", "--n", "3", "--r", "4", "--p", "2", "--h", "1/2", "--k", "1/4"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let typed: cyclotomic_blocks::RpnReport = serde_json::from_slice(&a).unwrap();
    assert_eq!(serde_json::to_string(&typed).unwrap() + "\n", String::from_utf8(a).unwrap());
}

#[test]
fn csv_and_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("blocks.csv");
    let out = run(&[
        "blocks-r1", "--n", "2", "--r", "1", "--h", "1/2", "--format", "csv", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "block,multipartition\n0,[[2]]\n0,\"[[1,1]]\"\n");

    let out = run(&["enumerate", "--n", "2", "--r", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert_eq!(text.lines().nth(1), Some("0,\"[[2],[]]\""));
}

#[test]
fn enumerate_json() {
    let v = json(&["enumerate", "--n", "1", "--r", "2"]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["multipartitions"], serde_json::json!([[[1], []], [[], [1]]]));
}

#[test]
fn table_format_mentions_blocks() {
    let out = run(&["blocks-rpn", "--n", "2", "--r", "2", "--p", "2", "--h", "1/5", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4 label(s), 4 block(s)"));
    assert!(text.contains("((1),(1))<1>*"));
}
