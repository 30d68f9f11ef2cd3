//! End-to-end runs of the command-line front end.

use bordered_actions::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn json(args: &[&str]) -> Value {
    let mut full = vec!["bordered-actions", "--format", "json"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.status, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn status(args: &[&str]) -> i32 {
    let mut full = vec!["bordered-actions"];
    full.extend_from_slice(args);
    run(full).status
}

#[test]
fn classify_annulus_example() {
    let v = json(&["classify", "ann1", "--N", "12", "--m", "12", "--k", "7", "--orientable"]);
    assert_eq!(v["version"], "1");
    assert_eq!(v["result"]["kind"], "classification");
    assert_eq!(v["result"]["data"]["class_count"], 2);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["bordered-actions", "--format", "json", "enumerate", "--N", "6"];
    assert_eq!(run(args).stdout, run(args).stdout);
}

#[test]
fn enumerate_order_two() {
    let v = json(&["enumerate", "--N", "2"]);
    let rows = v["result"]["data"].as_array().unwrap();
    let total: u64 = rows.iter().map(|r| r["classes"].as_u64().unwrap()).sum();
    assert_eq!(total, 14);
}

#[test]
fn extremal_commands_agree() {
    let v = json(&["min-genus", "--N", "15", "--variant", "p+", "--both"]);
    assert_eq!(v["result"]["data"]["agree"], true);
    assert_eq!(v["result"]["data"]["closed"]["value"], 8);
    let v = json(&["max-order", "--p", "4", "--both"]);
    assert_eq!(v["result"]["data"]["search"]["value"], 10);
}

#[test]
fn verify_small_sweep() {
    let v = json(&["verify", "--n-max", "12", "--types", "mb1,d21", "--jobs", "1"]);
    assert_eq!(v["result"]["kind"], "verification");
}

#[test]
fn csv_and_table_render() {
    let out = run(["bordered-actions", "--format", "csv", "classify", "ann2", "--N", "6"]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 5);
    let out = run(["bordered-actions", "orbits", "d6", "--N", "2"]);
    assert!(out.stdout.contains("orbit(s)"));
}

#[test]
fn exit_codes() {
    assert_eq!(status(&["classify", "nope", "--N", "4"]), EXIT_USAGE);
    assert_eq!(status(&["classify", "mb1", "--N", "4"]), EXIT_USAGE);
    assert_eq!(status(&["min-genus", "--N", "9", "--variant", "p+-"]), EXIT_USAGE);
    assert_eq!(status(&["verify", "--n-max", "1000"]), EXIT_USAGE);
    assert_eq!(status(&["enumerate", "--N", "1"]), EXIT_USAGE);
    assert_eq!(status(&["--version"]), EXIT_OK);
    assert_ne!(EXIT_FAILURE, EXIT_OK);
}
