use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabletoric")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn analyze_json(family: &str) -> Value {
    let o = run(&["analyze", "--family", family, "--dmax", "5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn two_odd_holes_report() {
    let r = analyze_json("two_odd_holes(2,2)");
    assert_eq!(r["mu"], 2);
    assert_eq!(r["normal"]["status"], "nonnormal");
    assert_eq!(r["normal"]["witness"], serde_json::json!([1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5]));
    assert_eq!(r["quadratic_gb"]["status"], "certified-impossible");
    assert_eq!(r["alpha"], 2);
    assert!(r["version"].is_string());
}

#[test]
fn complement_of_six_cycle_report() {
    let r = analyze_json("complement_of_cycle(6)");
    assert_eq!(r["mu"], 3);
    assert_eq!(r["unimodular"], true);
    assert_eq!(r["complement_bipartite"], true);
    assert_eq!(r["normal"]["status"], "normal");
}

#[test]
fn complete_graph_report() {
    let r = analyze_json("complete(5)");
    assert_eq!(r["mu"], 0);
    assert_eq!(r["unimodular"], true);
    assert_eq!(r["normal"]["status"], "normal");
    assert_eq!(r["generators"], serde_json::json!([]));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["analyze", "--family", "random_alpha2:6,0.5,3", "--seed", "5", "--budget", "2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn family_files() {
    let o = run(&["family", "two_odd_holes:2,3"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("p 12 ")));
    let o = run(&["family", "--family", "complete(3)"]);
    assert!(stdout(&o).contains("p 3 3\ne 1 2\ne 1 3\ne 2 3\n"));
    let o = run(&["family", "hole_antihole(5,7)"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("p 12 ")));
}

#[test]
fn input_file_and_witness_output() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let witness = dir.path().join("w.txt");
    let report = dir.path().join("r.txt");
    let o = run(&["family", "two_odd_holes:2,2", "--out", graph.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&[
        "analyze",
        "--input",
        graph.to_str().unwrap(),
        "--format",
        "text",
        "--out",
        report.to_str().unwrap(),
        "--witness-out",
        witness.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.contains("mu: 2\n"));
    assert!(text.contains("quadratic_gb: certified-impossible"));
    let parsed = stabletoric::polytope::read_witness(&fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(parsed.len(), 1);
    let g = stabletoric::graph::io::read_simple_graph(&fs::read_to_string(&graph).unwrap()).unwrap();
    let (w, cert) = &parsed[0];
    assert!(cert.verify(&stabletoric::polytope::stable_set_polytope(&g), w));
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "p 3 1\ne 1 9\n").unwrap();
    let o = run(&["analyze", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["analyze", "--family", "nope:1"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--family", "complete:3", "--dmax", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nosuchsuite"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
}

#[test]
fn verify_suites_from_the_command_line() {
    let o = run(&["verify", "mu", "cycles=4,6,8"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for (m, mu) in [(4, 2), (6, 3), (8, 4)] {
        assert!(out.contains(&format!("PASS complement C{m}: mu={mu}")), "{out}");
    }
    let o = run(&["verify", "witnesses", "kind=i", "lengths=7,7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("cone=true semigroup=false"));
    let o = run(&["verify", "unimodularity", "n=5", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instances"].as_array().unwrap().len(), 1024);
}

#[test]
fn custom_order_is_used() {
    let o = run(&["analyze", "--family", "complement_of_cycle:4", "--order", "lex:9,8,7,6,5,4,3,2,1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r["groebner"]["order"].as_str().unwrap().starts_with("lex 9,8,7"));
    let o = run(&["analyze", "--family", "complement_of_cycle:4", "--order", "lex:1,2"]);
    assert_eq!(o.status.code(), Some(2));
}
