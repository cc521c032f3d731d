use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn polynerve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polynerve")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn nerve_dot_has_one_node_per_chain() {
    let out = polynerve(&["nerve", "-i", &data("kite.json"), "-k", "1", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 19);
}

#[test]
fn jankov_exit_codes() {
    let out = polynerve(&["jankov", "-i", &data("kite.json"), "--target", "2.1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"], true);

    let dir = tempfile::tempdir().unwrap();
    let nerve_file = dir.path().join("nerve.json");
    let nerve_path = nerve_file.to_str().unwrap();
    assert_eq!(polynerve(&["nerve", "-i", &data("kite.json"), "-o", nerve_path]).status.code(), Some(0));
    let out = polynerve(&["jankov", "-i", nerve_path, "--target", "2.1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["result"], false);
    assert!(v["witness"]["map"].as_object().is_some_and(|m| !m.is_empty()));
}

#[test]
fn contype_and_connected() {
    let out = polynerve(&["contype", "-i", &data("fork.json")]);
    assert_eq!(json(&out)["con_type"], "2");
    let out = polynerve(&["connected", "-i", &data("fork.json"), "--target", "1^3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn validate_reports_counter_valuation() {
    let out = polynerve(&["validate", "-i", &data("fork.json"), "--logic", "KC"]);
    assert_eq!(out.status.code(), Some(1));
    let out = polynerve(&["validate", "-i", &data("fork.json"), "--logic", "p | ~p"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["counter_valuation"].is_object());
}

#[test]
fn witness_maps_onto_input() {
    let out = polynerve(&["witness", "-i", &data("kite.json"), "--lambda", "2.1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let images: std::collections::BTreeSet<&str> =
        v["witness"]["map"].as_object().unwrap().values().map(|t| t.as_str().unwrap()).collect();
    assert_eq!(images.len(), 5);
}

#[test]
fn subdivide_and_realize() {
    let out = polynerve(&["subdivide", "-i", &data("triangle.json")]);
    assert_eq!(json(&out)["f_vector"], serde_json::json!([7, 12, 6]));
    let out = polynerve(&["subdivide", "-i", &data("segment.json"), "--kind", "stellar", "--point", "1/3"]);
    assert_eq!(json(&out)["f_vector"], serde_json::json!([3, 2]));
    let out = polynerve(&["subdivide", "-i", &data("triangle.json"), "--kind", "farey", "--simplex", "0,1,2"]);
    assert_eq!(json(&out)["unimodular"], true);
    let out = polynerve(&["realize", "-i", &data("fork.json")]);
    assert_eq!(json(&out)["f_vector"], serde_json::json!([3, 2]));
}

#[test]
fn census_agrees_on_small_posets() {
    for (size, lambda) in [("5", "2.1"), ("4", "1^3")] {
        let out = polynerve(&["census", "--size", size, "--samples", "40", "--seed", "7", "--lambda", lambda]);
        assert_eq!(out.status.code(), Some(0));
        let mut rows = csv::Reader::from_reader(out.stdout.as_slice());
        let headers = rows.headers().unwrap().clone();
        let agree = headers.iter().position(|h| h == "agree").unwrap();
        let records: Vec<_> = rows.records().map(Result::unwrap).collect();
        assert_eq!(records.len(), 40);
        assert!(records.iter().all(|r| &r[agree] == "true"));
    }
}

#[test]
fn errors_exit_two() {
    let out = polynerve(&["nerve", "-i", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let out = polynerve(&["jankov", "-i", &data("fork.json"), "--target", "1^"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polynerve(&["subdivide", "-i", &data("fork.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(polynerve(&["frobnicate"]).status.code(), Some(2));
}
