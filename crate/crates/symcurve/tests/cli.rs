use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcurve"))
        .args(args)
        .env_remove("SYMCURVE_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn assert_no_numbers(v: &Value) {
    match v {
        Value::Number(n) => panic!("numeric literal {n} in output"),
        Value::Array(a) => a.iter().for_each(assert_no_numbers),
        Value::Object(m) => m.values().for_each(assert_no_numbers),
        _ => {}
    }
}

#[test]
fn class_examples() {
    let v = json(&["class", "ramification", "--g", "4", "--d", "3"]);
    assert_eq!(v["result"]["divisor"]["a"], "10");
    assert_eq!(v["result"]["divisor"]["b"], "12");
    assert_eq!(v["result"]["basis"], serde_json::json!(["theta", "x"]));

    let v = json(&[
        "class",
        "subordinate",
        "--g",
        "4",
        "--d",
        "3",
        "--n",
        "5",
        "--r",
        "2",
    ]);
    assert_eq!(v["result"]["class"], "theta - x");

    let v = json(&["class", "small-diagonal", "--g", "7", "--d", "2"]);
    assert_eq!(v["result"]["coefficients"], serde_json::json!(["-2", "16"]));

    let v = json(&["class", "e-k", "--k", "3"]);
    assert_eq!(v["result"]["class"], "3*theta - 5*x");
    assert_eq!(v["result"]["divisor"]["slope"], "5/3");

    let v = json(&["class", "bipartition-diagonal", "--g", "4", "--d", "3"]);
    assert_eq!(
        v["result"]["coefficients"],
        serde_json::json!(["0", "12", "-90", "228"])
    );
    let v = json(&[
        "class",
        "bipartition-diagonal",
        "--g",
        "4",
        "--d",
        "3",
        "--variant",
        "statement",
    ]);
    assert_eq!(v["result"]["coefficients"][2], "-102");

    let v = json(&["class", "hyperelliptic-c1d", "--g", "5", "--d", "3"]);
    assert_eq!(v["result"]["class"], "theta - 3*x");
}

#[test]
fn intersect_examples() {
    let value = |e: &str, g: &str, d: &str| {
        json(&["intersect", e, "--g", g, "--d", d])["result"]["value"].clone()
    };
    assert_eq!(value("(theta - x)^3", "4", "3"), "-1");
    assert_eq!(value("theta^3", "5", "3"), "60");
    assert_eq!(value("smalldiag * ramification", "4", "3"), "324");
    assert_eq!(value("(theta - 5/3*x)^3", "5", "3"), "-80/27");
    assert_eq!(value("x^2*theta", "4", "3"), "4");
    let v = json(&[
        "intersect",
        "subordinate*theta^2",
        "--g",
        "4",
        "--d",
        "3",
        "--n",
        "5",
        "--r",
        "2",
    ]);
    assert_eq!(v["result"]["value"], "12");
}

#[test]
fn cone_examples() {
    let v = json(&["cone", "--g", "5", "--d", "3", "--curve", "hyperelliptic"]);
    assert_eq!(v["result"]["status"], "exact");
    assert_eq!(v["result"]["upper"]["class"], "-theta + 7*x");
    assert_eq!(v["result"]["lower"]["class"], "theta - 3*x");

    let v = json(&["cone", "--g", "4", "--d", "3"]);
    assert_eq!(v["result"]["lower"]["class"], "5*theta - 6*x");
    assert_eq!(
        v["result"]["nef"]["diagonal_nef_ray"]["class"],
        "-theta + 12*x"
    );

    let v = json(&["cone", "--g", "5", "--d", "3", "--member", "theta - x"]);
    assert_eq!(v["result"]["lower"]["class"], "3*theta - 5*x");
    assert_eq!(v["result"]["membership"]["position"], "inside");

    let v = json(&["cone", "--g", "8", "--d", "3", "--member", "theta - 3*x"]);
    assert_eq!(v["result"]["status"], "bracket");
    assert_eq!(v["result"]["lower_inner"]["class"], "theta - 2*x");
    assert_eq!(v["result"]["lower_outer"]["class"], "theta - 6*x");
    assert_eq!(v["result"]["membership"]["position"], "undetermined");
    assert!(v["provenance"].as_array().unwrap().len() >= 3);

    let v = json(&["cone", "--g", "7", "--d", "3"]);
    assert_eq!(v["result"]["nef"]["theta_minus_x_ample"], true);
}

#[test]
fn volume_examples() {
    let v = json(&[
        "volume", "--g", "4", "--d", "3", "--curve", "general", "--t", "1",
    ]);
    assert_eq!(v["result"]["value"], "1");
    assert_eq!(v["result"]["top_self_intersection"], "-1");
    let v = json(&["volume", "--g", "4", "--d", "3", "--t", "1/2"]);
    assert_eq!(v["result"]["value"], "73/8");
    let v = json(&[
        "volume",
        "--g",
        "4",
        "--d",
        "3",
        "--t",
        "1",
        "--curve",
        "hyperelliptic",
    ]);
    assert_eq!(v["result"]["value"], "3");
    assert_eq!(v["result"]["integrality"]["is_integer"], true);
    let v = json(&[
        "volume",
        "--g",
        "5",
        "--d",
        "4",
        "--t",
        "1",
        "--curve",
        "hyperelliptic",
    ]);
    assert_eq!(v["result"]["value"], "15/2");
    assert_eq!(v["result"]["integrality"]["is_integer"], false);
}

#[test]
fn verify_passes_and_injection_fails() {
    let v = json(&["verify", "--suite", "all"]);
    assert_eq!(v["result"]["passed"], true);
    assert_eq!(v["result"]["failures"], "0");
    let reports = v["result"]["reports"].as_array().unwrap();
    let diag = reports
        .iter()
        .find(|r| r["name"] == "bipartition-diagonal")
        .unwrap();
    assert_eq!(diag["status"], "pass");
    assert_eq!(diag["documented_discrepancy"]["stated"], "-102");

    let out = run(&[
        "verify",
        "--suite",
        "combsum",
        "--max",
        "5",
        "--inject",
        "flip-combsum-rhs",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["reports"][0]["counterexample"]["params"], "m=1");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["class", "nope", "--g", "4"]), 2);
    assert_eq!(code(&["class", "subordinate", "--g", "4", "--d", "3"]), 2);
    assert_eq!(code(&["intersect", "theta +", "--g", "4", "--d", "3"]), 2);
    assert_eq!(code(&["intersect", "y^3", "--g", "4", "--d", "3"]), 2);
    assert_eq!(code(&["volume", "--g", "4", "--d", "3", "--t", "0.5"]), 2);
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(code(&["class", "ramification", "--g", "3", "--d", "2"]), 3);
    assert_eq!(code(&["intersect", "theta^2", "--g", "4", "--d", "3"]), 3);
    assert_eq!(code(&["cone", "--g", "4", "--d", "4"]), 3);
    assert_eq!(code(&["volume", "--g", "5", "--d", "3", "--t", "1"]), 3);
    assert_eq!(code(&["volume", "--g", "4", "--d", "3", "--t", "2"]), 4);
    assert_eq!(
        code(&[
            "volume",
            "--g",
            "5",
            "--d",
            "3",
            "--t",
            "4",
            "--curve",
            "hyperelliptic"
        ]),
        4
    );
    assert_eq!(code(&["volume", "--g", "4", "--d", "3", "--t", "-1/2"]), 4);

    let out = run(&["volume", "--g", "4", "--d", "3", "--t", "2"]);
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("[0, 12/11]"), "{msg}");
}

#[test]
fn json_round_trips_and_has_no_numbers() {
    let cases: [&[&str]; 4] = [
        &[
            "class",
            "bipartition-diagonal",
            "--g",
            "6",
            "--d",
            "3",
            "--format",
            "json",
        ],
        &["cone", "--g", "9", "--d", "5", "--format", "json"],
        &[
            "volume", "--g", "6", "--d", "5", "--t", "3/4", "--format", "json",
        ],
        &[
            "verify", "--suite", "orth", "--max", "10", "--format", "json",
        ],
    ];
    for args in cases {
        let out = run(args);
        let text = String::from_utf8(out.stdout).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_no_numbers(&v);
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "inputs", "provenance", "result"]);
        assert_eq!(run(args).stdout, text.as_bytes(), "deterministic output");
    }
}

#[test]
fn format_comes_from_environment_unless_overridden() {
    let bin = env!("CARGO_BIN_EXE_symcurve");
    let args = ["class", "ramification", "--g", "4", "--d", "3"];
    let out = Command::new(bin)
        .args(args)
        .env("SYMCURVE_FORMAT", "json")
        .output()
        .unwrap();
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_ok());
    let out = Command::new(bin)
        .args(args)
        .args(["--format", "text"])
        .env("SYMCURVE_FORMAT", "json")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("command: class\n"));
    assert!(run(&args).stdout.starts_with(b"command: class\n"));
}
