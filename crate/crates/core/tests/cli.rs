use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bernstir"))
        .args(args)
        .env_remove("BERNSTIR_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc)
}

fn rational(v: &Value) -> String {
    let (num, den) = (v["num"].as_str().unwrap(), v["den"].as_str().unwrap());
    if den == "1" { num.to_string() } else { format!("{num}/{den}") }
}

#[test]
fn stirling_examples() {
    for (args, want) in [
        (["--kind", "2", "--N", "4", "--K", "3", "--r", "2"], "5"),
        (["--kind", "1", "--N", "3", "--K", "2", "--r", "1"], "3"),
        (["--kind", "2", "--N", "2", "--K", "2", "--r", "2"], "1"),
    ] {
        let mut full = vec!["stirling"];
        full.extend(args);
        let (code, doc) = json(&full);
        assert_eq!(code, 0);
        assert_eq!(doc["command"], "stirling");
        assert_eq!(doc["result"]["value"], want);
    }
}

#[test]
fn stirling_table() {
    let (code, doc) = json(&["stirling", "--kind", "second", "--table", "5"]);
    assert_eq!(code, 0);
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 21);
    let bell5: u64 = rows.iter().filter(|r| r["N"] == 5).map(|r| r["value"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(bell5, 52);
}

#[test]
fn bernoulli_examples() {
    let (code, doc) = json(&["bernoulli", "--family", "B", "--n", "2", "--alpha", "1/1", "--x", "0"]);
    assert_eq!(code, 0);
    assert_eq!(rational(&doc["result"]["value"]), "1/6");

    let (code, doc) = json(&["bernoulli", "--family", "b", "--n", "0", "--alpha", "7/3", "--x", "5"]);
    assert_eq!(code, 0);
    assert_eq!(rational(&doc["result"]["value"]), "1");

    let (code, doc) = json(&["bernoulli", "--family", "B", "--n", "1", "--alpha", "-1/1", "--x", "0", "--route", "both"]);
    assert_eq!(code, 0);
    assert_eq!(rational(&doc["result"]["closed"]), "1/2");
    assert_eq!(rational(&doc["result"]["oracle"]), "1/2");
    assert_eq!(doc["result"]["agree"], true);
}

#[test]
fn verify_examples() {
    let (code, doc) = json(&["verify", "c5-first", "--sign", "corrected", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["failures"], Value::Array(vec![]));

    let (code, doc) = json(&["verify", "c5-first", "--sign", "paper", "--max-n", "2"]);
    assert_eq!(code, 1);
    let failures = doc["result"]["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    assert!(failures.iter().all(|f| f["point"]["n"] == 1));
    let first = &failures[0];
    assert_eq!(
        (first["point"]["n"].clone(), first["point"]["k"].clone(), first["point"]["r"].clone()),
        (1.into(), 0.into(), 1.into())
    );
    assert_eq!(rational(&first["lhs"]), "3");
    assert_eq!(rational(&first["rhs"]), "-3");

    let (code, doc) = json(&["verify", "a5", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["failures"], Value::Array(vec![]));
}

#[test]
fn table_examples() {
    let values = |args: &[&str], key: &str| -> Vec<String> {
        let (code, doc) = json(args);
        assert_eq!(code, 0, "{args:?}");
        doc["result"]["rows"]
            .as_array()
            .unwrap()
            .iter()
            .inspect(|r| assert_eq!(r["agree"], true))
            .map(|r| rational(&r[key]))
            .collect()
    };
    assert_eq!(values(&["table", "genocchi", "--max", "3"], "product"), ["-1", "1", "-3"]);
    assert_eq!(
        values(&["table", "bernoulli-numbers", "--max", "4"], "oracle"),
        ["1", "-1/2", "1/6", "0", "-1/30"]
    );
    assert_eq!(values(&["table", "euler-even", "--n", "1", "--m-max", "4"], "closed"), ["1", "1", "1"]);
}

#[test]
fn csv_output() {
    let out = run(&["table", "bernoulli-numbers", "--max", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n,oracle,closed,stirling_sum,agree\n0,1,1,1,true\n1,-1/2,-1/2,-1/2,true\n2,1/6,1/6,1/6,true\n"
    );
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["stirling", "--kind", "2", "--N", "4", "--K", "3"]), 0);
    assert_eq!(code(&["verify", "c1-first", "--sign", "paper", "--max-n", "1"]), 1);
    assert_eq!(code(&["verify", "c7"]), 2);
    assert_eq!(code(&["stirling", "--kind", "3", "--N", "1", "--K", "1"]), 2);
    assert_eq!(code(&["stirling", "--kind", "2", "--N", "-1", "--K", "1"]), 2);
    assert_eq!(code(&["bernoulli", "--family", "B", "--n", "1", "--alpha", "1/0", "--x", "0"]), 2);
    assert_eq!(code(&["bernoulli", "--family", "B", "--n", "3", "--alpha", "1", "--x", "0", "--p", "2"]), 2);
    assert_eq!(code(&["table", "genocchi", "--max", "-1"]), 2);

    let out = run(&["bernoulli", "--family", "b", "--n", "1", "--alpha", "-1", "--x", "-1", "--q", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("j = 1"));
}

#[test]
fn max_order_env_var() {
    let run_with = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_bernstir"))
            .args(["bernoulli", "--family", "B", "--n", "20", "--alpha", "1/2", "--x", "1", "--route", "oracle"])
            .env("BERNSTIR_MAX_ORDER", value)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run_with("21"), Some(0));
    assert_eq!(run_with("20"), Some(2));
    assert_eq!(run_with("lots"), Some(2));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = ["verify", "c1-first", "--sign", "paper", "--max-n", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    for f in doc["result"]["failures"].as_array().unwrap() {
        let text = rational(&f["lhs"]);
        let parsed = bernstir::arith::parse_rational(&text).unwrap();
        assert_eq!(bernstir::arith::format_rational(&parsed), text);
    }
}
