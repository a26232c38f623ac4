use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_secantlab"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("secantlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(path: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn construct_writes_six_quadrics() {
    let out = scratch("v22.ideal");
    let o = run(&["construct", "--variety", "veronese:2,2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let file = secantlab::polyring::IdealFile::read(&out).unwrap();
    assert_eq!(file.polys.len(), 6);
    assert!(file.polys.iter().all(|p| p.degree() == Some(2)));

    let b = run(&["betti", "--ideal", out.to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&b.stdout).contains("1:  . 6 8 3"));
}

#[test]
fn verify_segre_projection() {
    let json = scratch("thm33.json");
    let o = run(&[
        "verify", "thm3.3", "--variety", "segre:1,2", "--center", "general", "--seed", "7", "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json_of(&json);
    assert_eq!(v["verdict"], "pass");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 6);
    for c in checks {
        assert!(c["name"].is_string() && c["pass"].as_bool().unwrap());
        assert!(c.get("predicted").is_some() && c.get("computed").is_some());
    }
}

#[test]
fn verify_del_pezzo_example() {
    let json = scratch("ex54.json");
    let o = run(&["verify", "ex5.4", "--seed", "1", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&json);
    let betti = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "Betti table of X_q")
        .unwrap();
    assert_eq!(betti["computed"], serde_json::json!([[[0, 0], 1], [[1, 2], 5], [[2, 2], 5], [[3, 2], 1]]));
}

#[test]
fn verify_reports_are_reproducible() {
    let a = run(&["verify", "cor3.2", "--trials", "3", "--seed", "4", "--json", "-"]);
    let b = run(&["verify", "cor3.2", "--trials", "3", "--seed", "4", "--json", "-"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stratify_reports_are_byte_identical() {
    let args = ["stratify", "--variety", "veronese:2,2", "--trials", "8", "--on-secant", "3", "--seed", "9", "--json", "-"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stratify_json_schema() {
    let json = scratch("strat.json");
    let o = run(&["stratify", "-v", "segre:1,2", "--trials", "4", "--on-secant", "0", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&json);
    for key in ["variety", "field", "trials", "seed", "histogram", "inconsistent", "expected", "verdict"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["histogram"]["2"], 4);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["construct", "--variety", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "--ideal", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["project", "-v", "twisted-cubic", "-c", "1,0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "-v", "veronese:2,2", "--field", "GF(4)"]).status.code(), Some(2));
}

#[test]
fn hypothesis_unmet_is_not_a_pass() {
    let o = run(&["verify", "thm3.3", "-v", "elliptic-quartic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stdout).contains("hypothesis unmet"));
}

#[test]
fn budget_exceeded_exits_three() {
    let o = bin().args(["verify", "ex5.4"]).env("SECANTLAB_MAX_PAIRS", "3").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn secant_over_a_prime_field() {
    let o = run(&["secant", "-v", "veronese:2,2", "-c", "on-secant", "--field", "GF(32003)", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["s"], 1);
    assert_eq!(v["agreement"], "equal");
}
