use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobi-gkn"))
        .args(args)
        .env_remove("JACOBI_GKN_PRECISION")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn apply_eigenfunction() {
    let out = run(&["apply", "--alpha", "1/3", "--beta", "2/5", "--n", "1", "P:2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    // 2(2 + 1/3 + 2/5 + 1) = 112/15
    assert_eq!(v["result"]["multiple_of_input"], "112/15");
    assert_eq!(v["config"]["alpha"], "1/3");
}

#[test]
fn apply_constant_and_symmetric_method() {
    let v = json(&run(&["apply", "--n", "1", "const:1"]));
    assert_eq!(v["result"]["is_zero"], true);
    let a = json(&run(&["apply", "--n", "2", "--alpha", "1/3", "psi+:1"]));
    let b = json(&run(&["apply", "--n", "2", "--alpha", "1/3", "psi+:1", "--method", "symmetric"]));
    assert_eq!(a["result"]["output"], b["result"]["output"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["apply", "--alpha", "0", "--beta", "0", "--n", "2", "psi+:0"]).status.code(), Some(3));
    assert_eq!(run(&["apply", "P:x"]).status.code(), Some(2));
    assert_eq!(run(&["apply", "--alpha", "1/0", "P:1"]).status.code(), Some(2));
    assert_eq!(run(&["apply", "--alpha", "5/4", "P:1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["extension", "--unitary", "[[\"2\",\"0\"],[\"0\",\"1\"]]"]).status.code(), Some(2));
    // P_0, P_0 repeats a condition, so the claim fails
    assert_eq!(run(&["verify", "any-jacobi", "--n", "2", "--indices", "0,0"]).status.code(), Some(1));
    let err = json(&run(&["apply", "--alpha", "0", "psi+:0"]));
    assert_eq!(err["error"]["kind"], "DegenerateParameter");
}

#[test]
fn verify_claims() {
    let v = json(&run(&["verify", "m-rank", "--n", "3", "--alpha", "1/3", "--beta", "2/5"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["result"]["evidence"]["summary"]["ranks"]["+1"], 6);
    let out = run(&["verify", "overn", "--n", "2", "--alpha", "1/2", "--beta", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "any-jacobi", "--n", "2", "--indices", "4,7", "--alpha", "1/3", "--beta", "2/5"]);
    assert_eq!(out.status.code(), Some(0));
    for claim in ["secondkinddefect", "leftdef-equal"] {
        assert_eq!(run(&["verify", claim, "--n", "2", "--alpha", "1/3", "--beta", "2/5"]).status.code(), Some(0), "{claim}");
    }
}

#[test]
fn sesqui_regression_value() {
    let v = json(&run(&["sesqui", "--n", "1", "phi+:0", "psi+:0", "--alpha", "1/2", "--beta", "2/5"]));
    // −(1/2)·2^{7/5} = −2^{2/5}
    assert_eq!(v["result"]["full"], serde_json::json!([{ "coeff": "-1/1", "pow2": "2/5" }]));
    let preview = v["result"]["full_preview"][0].as_f64().unwrap();
    assert!((preview + 2f64.powf(0.4)).abs() < 1e-14);
    assert_eq!(v["passed"], true);
}

#[test]
fn domain_and_extension() {
    let out = run(&["domain", "--n", "2", "--check", "minimal", "phi+:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["value"], true);
    let out = run(&["domain", "--n", "2", "--check", "minimal", "psi+:0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["extension", "--n", "1", "--unitary", "[[\"1\",\"0\"],[\"0\",\"1\"]]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["glazman"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "any-jacobi", "--n", "3", "--seed", "11", "--alpha", "1/3", "--beta", "2/5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let s = run(&["sesqui", "--n", "2", "phi+:1", "psi+:0", "--alpha", "1/3", "--beta", "3/4"]);
    let t = run(&["sesqui", "--n", "2", "phi+:1", "psi+:0", "--alpha", "1/3", "--beta", "3/4"]);
    assert_eq!(s.stdout, t.stdout);
}

#[test]
fn precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_jacobi-gkn"))
        .args(["apply", "P:1"])
        .env("JACOBI_GKN_PRECISION", "512")
        .output()
        .unwrap();
    assert_eq!(json(&out)["config"]["precision_bits"], 512);
}

#[test]
fn text_output() {
    let out = run(&["apply", "--n", "1", "const:1", "--output", "text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("output_text: \"0\""), "{s}");
}
