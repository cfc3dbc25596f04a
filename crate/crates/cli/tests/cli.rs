use std::process::{Command, Output};

use runforge::CliError;
use serde_json::Value;

fn runforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_runforge"))
        .args(args)
        .env("RUNFORGE_JOBS", "2")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = runforge(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(args: &[&str]) -> i32 {
    runforge(args).status.code().expect("exit code")
}

#[test]
fn runs_of_the_worked_example() {
    let v = json(&["runs", "ababaabaa"]);
    assert_eq!(v["command"], "runs");
    let r = &v["result"];
    assert_eq!(r["trl"], 16);
    assert_eq!(r["run_count"], 4);
    assert_eq!(r["exponent_sum"], "53/6");
    let triples: Vec<(u64, u64, u64)> = r["runs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            (
                x["start"].as_u64().unwrap(),
                x["length"].as_u64().unwrap(),
                x["period"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(triples, [(1, 5, 2), (3, 7, 3), (5, 2, 1), (8, 2, 1)]);
}

#[test]
fn envelope_fields_and_reproducibility() {
    let strip = |mut v: Value| {
        let obj = v.as_object_mut().unwrap();
        let keys: Vec<_> = obj.keys().cloned().collect();
        assert_eq!(keys, ["command", "elapsed_ms", "parameters", "result", "version"]);
        obj.remove("elapsed_ms");
        v
    };
    for args in [&["tau", "--n", "12"][..], &["anneal", "--n", "12", "--iters", "2000"], &["table2"]] {
        assert_eq!(strip(json(args)), strip(json(args)), "{args:?}");
    }
}

#[test]
fn table1_rows() {
    let v = json(&["table1", "--max-n", "18"]);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 18);
    for (n, tau) in [(2, 2), (16, 60), (18, 73)] {
        assert_eq!(rows[n - 1]["n"], n);
        assert_eq!(rows[n - 1]["tau"], tau);
        assert_eq!(rows[n - 1]["reference_trl"], tau);
    }
    assert!(v["result"]["problems"].as_array().unwrap().is_empty());
}

#[test]
fn table2_values() {
    let v = json(&["table2"]);
    let got: Vec<(u64, String)> = v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["alpha"].as_u64().unwrap(), r["trl_density"].as_str().unwrap().to_string()))
        .collect();
    let want = [(2, "1.9775"), (3, "1.0290"), (5, "0.5208"), (10, "0.2296")];
    assert_eq!(got.len(), want.len());
    for ((a, s), (wa, ws)) in got.iter().zip(want) {
        assert_eq!((*a, s.as_str()), (wa, ws));
    }
}

#[test]
fn expected_spot_values_and_oracle() {
    assert_eq!(json(&["expected", "--n", "2"])["result"]["total"], "1");
    assert_eq!(json(&["expected", "--n", "3"])["result"]["total"], "7/4");
    let v = json(&["expected", "--n", "8", "--alpha", "3", "--oracle"]);
    assert_eq!(v["result"]["total"], v["result"]["oracle"]);
}

#[test]
fn verify_paper_reports_unreproduced_claims() {
    let out = runforge(&["density", "--alpha", "2", "--verify-paper"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("warning: published claim not reproduced"), "{text}");
    let v = json(&["density", "--alpha", "2", "--verify-paper"]);
    let claims = v["result"]["published_claims"].as_array().unwrap();
    assert!(claims.iter().any(|c| c["agrees"] == false));
}

#[test]
fn csv_output_has_header() {
    let out = runforge(&["--format", "csv", "tau", "--n", "6"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,alpha,mode,value,witness"), "{text}");
}

#[test]
fn trl_accepts_several_words() {
    let v = json(&["trl", "aabaab", "abab"]);
    let text = v["result"].to_string();
    assert!(text.contains("aabaab") && text.contains("abab"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["runs", "ab1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["runs", "abc", "--alphabet", "2"]), 2);
    assert_eq!(code(&["tau", "--n", "40"]), 3);
    assert_eq!(code(&["table1", "--max-n", "23"]), 3);
    assert_eq!(code(&["expected", "--n", "30", "--alpha", "3", "--oracle"]), 3);
    assert_eq!(code(&["construct", "u", "--k", "3"]), 0);
    assert_eq!(CliError::invariant("fast and oracle disagree".into()).exit_code(), 4);
}
