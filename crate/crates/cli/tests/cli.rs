use std::process::{Command, Output};

use superlink::arith::eval::rational;
use superlink::arith::{rf_eval, RatFunc, RatFuncRecord};
use superlink::decomp::gl_family_table;
use superlink::engine::XiSeries;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superlink")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn unknot_prints_one() {
    for alg in ["gl:2,2", "gl:3,1", "osp:2"] {
        let o = run(&["link", "--algebra", alg, "--family", "vector", "--exponents", "1"]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "1\n");
    }
}

#[test]
fn xi_zero_prints_zero() {
    let o = run(&["xi", "--algebra", "gl:2,2", "--family", "vector", "-k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn negative_exponents_and_k() {
    let o = run(&["link", "--algebra", "osp:1", "--exponents", "3,-1,2"]);
    assert!(o.status.success());
    let o = run(&["xi", "--algebra", "gl:2,1", "-k", "-2"]);
    assert!(o.status.success());
    assert!(!stdout(&o).trim().is_empty());
}

#[test]
fn json_round_trips_through_eval() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("xi.json");
    let o = run(&["xi", "--algebra", "gl:2,1", "-k", "3", "--format", "json"]);
    assert!(o.status.success());
    std::fs::write(&path, o.stdout.clone()).unwrap();

    let rec: RatFuncRecord = serde_json::from_slice(&o.stdout).unwrap();
    let parsed = RatFunc::from_record(&rec).unwrap();
    let direct = XiSeries::new(&gl_family_table(2, 1).unwrap()).unwrap().xi(3);
    assert_eq!(parsed, direct);

    let o = run(&["eval", "--expr-file", path.to_str().unwrap(), "--q", "3/2", "--alpha", "7/2", "--digits", "30"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let want = rf_eval(&direct, &rational(3, 2), &rational(7, 2), 30).unwrap();
    assert_eq!(stdout(&o).trim(), want.to_string());
}

#[test]
fn output_is_deterministic() {
    let args = ["link", "--algebra", "gl:2,2", "--exponents", "2,-3,1"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["check", "--suite", "markov"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn table_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let p = path.to_str().unwrap();
    assert!(run(&["table", "--algebra", "gl:2,1", "--family", "adjoint", "--out", p]).status.success());
    let from_file = run(&["xi", "--table", p, "-k", "2"]);
    let builtin = run(&["xi", "--algebra", "gl:2,1", "--family", "adjoint", "-k", "2"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, builtin.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["xi", "-k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--suite", "fast"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--expr-file", "x", "--q", "abc", "--alpha", "1"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one_with_name() {
    let o = run(&["xi", "--algebra", "gl:2,2", "--family", "adjoint", "-k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("SchemaError"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    std::fs::write(&path, stdout(&run(&["xi", "--algebra", "gl:1,1", "-k", "2", "--format", "json"]))).unwrap();
    let o = run(&["eval", "--expr-file", path.to_str().unwrap(), "--q", "1", "--alpha", "1/2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("InvalidPoint"));

    let o = run(&["eval", "--expr-file", dir.path().join("missing.json").to_str().unwrap(), "--q", "2", "--alpha", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Io"));
}

#[test]
fn check_dimension_suite_passes() {
    let o = run(&["check", "--suite", "dimension"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"].as_array().unwrap().len(), 9);
    assert!(v.get("oracle").is_none());
}
