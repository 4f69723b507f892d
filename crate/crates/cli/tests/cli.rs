use std::path::PathBuf;
use std::process::{Command, Output};

use bcrystal::CrystalGraph;

fn bctab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bctab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("bctab-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn spin_graph_as_dot() {
    let o = bctab(&["crystal", "graph", "-t", "b", "-k", "2", "--lambda", "0", "-n", "1", "-o", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"S=")).count(), 4);
    let g = CrystalGraph::from_dot(&dot).unwrap();
    assert_eq!(g.len(), 4);
}

#[test]
fn json_output_parses_back() {
    let o = bctab(&["crystal", "graph", "--epsilon", "2", "-k", "2", "--lambda", "0", "-n", "1", "-o", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(CrystalGraph::from_json(&v).unwrap().len(), 5);
}

#[test]
fn delta_of_the_example_file() {
    let f = scratch("U.tab", "1,4,.,.,.\n2,3,.,.\n1,2\n1\n");
    let o = bctab(&["stat", "delta", "--epsilon", "1", "-f", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "8");
}

#[test]
fn nabla_of_a_file() {
    let f = scratch("V.tab", "2,3,.,.,.\n1,2,3,.\n1,1,2\n1\n");
    let o = bctab(&["stat", "nabla", "-t", "b", "-f", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn tensor_with_cross_check() {
    let o = bctab(&["crystal", "tensor", "-t", "b", "-k", "2", "--mu", "0", "-m", "1", "--nu", "0", "-n", "1", "--check"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("((0),2) x1 dim 10"), "{out}");
    assert!(out.contains("((1,1),2) x1 dim 1"), "{out}");
}

#[test]
fn branch_and_lr_counts() {
    let o = bctab(&["crystal", "branch", "-t", "b", "--lambda", "1", "-n", "4", "--sigma", "2"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = bctab(&["lr", "coeff", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = bctab(&["lr", "enumerate", "--lambda", "2", "--mu", "1", "--nu", "1", "-t", "b", "-m", "4", "-n", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("1"));
}

#[test]
fn rsk_map_prints_both_tableaux() {
    let f = scratch("A.txt", "1 1 2\n2 2 1\n");
    let o = bctab(&["rsk", "map", "-f", f.to_str().unwrap()]);
    assert!(o.status.success());
    // H_{(2,1)} on both sides
    assert_eq!(stdout(&o), "P:\n1,2\n1\nQ:\n1,2\n1\n");
}

#[test]
fn characters() {
    let o = bctab(&["char", "schur", "--shape", "1", "--even", "2"]);
    assert_eq!(stdout(&o).trim(), "1 * x2^1 + 1 * x1^1");
    let o = bctab(&["char", "verify", "-t", "c", "--lambda", "0", "-n", "1", "--even", "2", "-D", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "ok");
    let o = bctab(&["char", "verify", "-t", "b", "--lambda", "0", "-n", "1", "--mu", "0", "-m", "1", "-D", "4"]);
    assert!(o.status.success());
}

#[test]
fn usage_errors_exit_two() {
    let o = bctab(&["crystal", "graph", "-t", "b", "-k", "2", "--lambda", "2", "-n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2λ₁ ≤ εn"));
    let o = bctab(&["crystal", "graph", "-t", "x", "-k", "2", "--lambda", "0", "-n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bctab(&["stat", "delta", "-t", "b", "-f", "/nonexistent/file.tab"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bctab(&["verify", "all", "--only", "11"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let o = bctab(&["verify", "all", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l.contains("[PASS]")));
    let again = Command::new(env!("CARGO_BIN_EXE_bctab"))
        .args(["verify", "all", "--seed", "7", "--only", "3,7,8"])
        .env("CRYSTAL_THREADS", "2")
        .output()
        .unwrap();
    let first: Vec<&String> = lines.iter().filter(|l| ["criterion  3", "criterion  7", "criterion  8"].iter().any(|p| l.starts_with(p))).collect();
    let second: Vec<String> = stdout(&again).lines().map(str::to_owned).collect();
    assert_eq!(first.len(), 3);
    assert_eq!(first.into_iter().cloned().collect::<Vec<_>>(), second);
}
