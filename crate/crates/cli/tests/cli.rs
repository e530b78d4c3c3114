use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perspectra")).args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("perspectra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_and_compare() {
    let g6 = tmp("g6.json");
    let id = tmp("id.json");
    let o = bin(&["construct", "--family", "gras", "--n", "6", "-o", g6.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&[
        "construct",
        "--family",
        "skew",
        "--n",
        "4",
        "--skew",
        "id",
        "--shuffle",
        "--seed",
        "3",
        "-o",
        id.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&["--json", "iso", g6.to_str().unwrap(), id.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["isomorphic"], true);
    let o = bin(&["--json", "aut", g6.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["automorphisms"], 720);
}

#[test]
fn exit_codes() {
    let bad = tmp("bad.json");
    std::fs::write(&bad, r#"{"points":["x","y","z"],"lines":[[0,1,1]]}"#).unwrap();
    let o = bin(&["iso", bad.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("repeats a point"));
    assert_eq!(bin(&["construct", "--family", "skew"]).status.code(), Some(2));
    assert_eq!(bin(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(bin(&["construct", "--family", "skew", "--n", "4", "--skew", "(1,5)"]).status.code(), Some(1));
}

#[test]
fn version_names_the_schema() {
    let o = bin(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("census schema 1"));
}

#[test]
fn census_counts_and_thread_independence() {
    let one = bin(&["--json", "--threads", "1", "census", "--family", "kappa"]);
    let four = bin(&["--json", "--threads", "4", "census", "--family", "kappa"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
    let v: serde_json::Value = serde_json::from_str(&stdout(&one)).unwrap();
    assert_eq!(v["classes"], 25);
    assert_eq!(v["listed"], 20);
}

#[test]
fn realize_reports_faithfulness() {
    let o = bin(&["--json", "realize", "--case", "c4", "--params", "beta1=-3,beta2=2,x=2,y=3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["faithful"], true);
    let o = bin(&["--json", "realize", "--case", "c4", "--params", "beta2=2,x=2,y=2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["faithful"], false);
    assert_eq!(v["lines_hold"], true);
}

#[test]
fn search_pg_exhausts_small_planes() {
    let c = tmp("mv.json");
    bin(&["construct", "--family", "skew", "--n", "4", "--skew", "(3,4)", "-o", c.to_str().unwrap()]);
    for q in ["2", "3", "4", "5"] {
        let o = bin(&["--json", "search-pg", c.to_str().unwrap(), "--q", q, "--budget", "1e8"]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["outcome"], "exhausted", "q={q}");
    }
}
