use std::path::Path;
use std::process::{Command, Output};

use kmatch::Graph;
use serde_json::Value;

fn kmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmatch")).args(args).env_remove("KMATCH_BUDGET").output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = kmatch(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_str().unwrap().to_owned();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let out = kmatch(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn gen_arrangement_with_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "a42.txt", &["--family", "arrangement", "--n", "4", "--s", "2"]);
    let g = Graph::parse_text(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (12, 24));
    let labels: Value = serde_json::from_str(&std::fs::read_to_string(format!("{path}.labels.json")).unwrap()).unwrap();
    assert_eq!(labels["0"], serde_json::json!([1, 2]));
    assert_eq!(labels.as_object().unwrap().len(), 12);
}

#[test]
fn gen_complete_to_stdout_and_round_trip() {
    let out = kmatch(&["gen", "--family", "complete", "--n", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("p 5 10\n"));
    assert_eq!(Graph::parse_text(&text).unwrap().to_text(), text);
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--family", "random-bipartite", "--a", "4", "--b", "4", "--p", "0.5", "--seed", "7"];
    assert_eq!(kmatch(&args).stdout, kmatch(&args).stdout);
    let other = ["gen", "--family", "random", "--n", "9", "--p", "0.4", "--seed", "3"];
    assert_eq!(kmatch(&other).stdout, kmatch(&other).stdout);
}

#[test]
fn solve_examples() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = gen(dir.path(), "c5", &["--family", "cycle", "--n", "5"]);
    let v = ok_json(&["solve", &c5, "--k", "2", "--mode", "perfect"]);
    assert_eq!(v["result"]["exists"], true);
    assert!(v["result"]["assignment"]["values"].is_object());

    let c7 = gen(dir.path(), "c7", &["--family", "cycle", "--n", "7"]);
    assert_eq!(ok_json(&["solve", &c7, "--k", "3", "--mode", "almost"])["result"]["exists"], true);

    let k33 = gen(dir.path(), "k33", &["--family", "complete-bipartite", "--a", "3", "--b", "3"]);
    assert_eq!(ok_json(&["solve", &k33, "--k", "3", "--mode", "mu"])["mu_k"], 9);

    let star = gen(dir.path(), "k14", &["--family", "complete-bipartite", "--a", "1", "--b", "4"]);
    let v = ok_json(&["solve", &star, "--k", "3", "--mode", "certificate"]);
    assert_eq!(v["certificate"]["s"], serde_json::json!([0]));
    let v = ok_json(&["solve", &star, "--k", "3", "--mode", "almost"]);
    assert_eq!(v["result"]["exists"], false);
    assert!(v["result"]["certificate"].is_object());
}

#[test]
fn preclude_examples() {
    let dir = tempfile::tempdir().unwrap();
    let k7 = gen(dir.path(), "k7", &["--family", "complete", "--n", "7"]);
    let v = ok_json(&["preclude", &k7, "--k", "3", "--exact"]);
    assert_eq!((v["value"].as_u64(), v["status"].as_str()), (Some(6), Some("proved")));
    assert_eq!((v["mode"].as_str(), v["strong"].as_bool()), (Some("exact"), Some(false)));

    let p5 = gen(dir.path(), "p5", &["--family", "path", "--n", "5"]);
    assert_eq!(ok_json(&["preclude", &p5, "--k", "3", "--strong", "--exact"])["value"], 0);

    let a52 = gen(dir.path(), "a52", &["--family", "arrangement", "--n", "5", "--s", "2"]);
    let v = ok_json(&["preclude", &a52, "--k", "3", "--strong", "--verify", "6", "--sample", "2000", "--seed", "1"]);
    assert_eq!(v["status"], "sampled_no_counterexample");
    assert_eq!(v["checked"], 2000);
    let w = &v["witness"];
    assert_eq!(w["edges"].as_array().unwrap().len() + w["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn preclude_is_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "g", &["--family", "random", "--n", "7", "--p", "0.7", "--seed", "5"]);
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let one = strip(ok_json(&["preclude", &g, "--k", "3", "--strong", "--jobs", "1"]));
    let four = strip(ok_json(&["preclude", &g, "--k", "3", "--strong", "--jobs", "4"]));
    assert_eq!(one, four);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k6 = gen(dir.path(), "k6", &["--family", "complete", "--n", "6"]);
    // refuted claim: a size-4 set already precludes strongly
    let out = kmatch(&["preclude", &k6, "--k", "3", "--strong", "--verify", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "upper_bound_only");

    assert_eq!(kmatch(&["preclude", &k6, "--k", "3", "--budget", "10"]).status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_kmatch"))
        .args(["preclude", &k6, "--k", "3"])
        .env("KMATCH_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));

    let bad = dir.path().join("bad");
    std::fs::write(&bad, "p 3 1\ne 0 7\n").unwrap();
    let bad = bad.to_str().unwrap();
    assert_eq!(kmatch(&["solve", bad, "--k", "3", "--mode", "mu"]).status.code(), Some(2));
    assert_eq!(kmatch(&["solve", &k6, "--k", "0", "--mode", "mu"]).status.code(), Some(2));
    assert_eq!(kmatch(&["gen", "--family", "cycle", "--n", "2"]).status.code(), Some(2));
    assert_eq!(kmatch(&["preclude", &k6, "--k", "3", "--exact", "--verify", "3"]).status.code(), Some(2));
    assert_eq!(kmatch(&["preclude", &k6, "--k", "3", "--verify", "99"]).status.code(), Some(2));
    assert_eq!(kmatch(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn theorems_kn_csv() {
    let out = kmatch(&["theorems", "--suite", "kn", "--kn-max", "6", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header.join(","), "theorem,instance,k,expected,computed,mode,provenance,status,elapsed_ms");
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let rows: Vec<Vec<&str>> = records.iter().map(|r| r.iter().collect()).collect();
    let mp: Vec<(&str, &str)> = rows.iter().filter(|r| r[0] == "mp_k_complete").map(|r| (r[1], r[7])).collect();
    assert_eq!(mp, [("K_3", "pass"), ("K_4", "pass"), ("K_5", "pass"), ("K_6", "pass")]);
    let k11 = rows.iter().find(|r| r[0] == "mp_complete" && r[1] == "K_11").unwrap();
    assert_eq!(k11[7], "skipped");
    // the closed form gives smp^k(K_6) = 5, but a size-4 set precludes, so the run fails
    let k6 = rows.iter().find(|r| r[0] == "smp_k_complete" && r[1] == "K_6").unwrap();
    assert_eq!((k6[3], k6[4], k6[7]), ("5", "4", "fail"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn theorems_json_bipartite() {
    let out = kmatch(&["theorems", "--suite", "bipartite", "--bipartite-graphs", "20", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], "pass");
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().filter(|r| r["theorem"] == "bipartite_odd").all(|r| r["computed"] == "0"));
    assert!(rows.iter().all(|r| r["provenance"] == "paper"));
}
