use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pancyclic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(out.stdout.split(|&b| b == b'\n').next().unwrap()).unwrap()
}

const K5: &str = "D~{\n";
const PETERSEN: &str = "IheA@GUAo\n";

#[test]
fn profile_of_k5() {
    let out = run(&["profile", "-"], K5);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        (v["n"].as_u64(), v["alpha"].as_u64(), v["kappa"].as_u64()),
        (Some(5), Some(1), Some(4))
    );
}

#[test]
fn check_emits_a_complete_certificate() {
    let out = run(&["check", "-"], K5);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hypothesis_holds"], true);
    assert_eq!(v["cycles"].as_object().unwrap().len(), 3);
    assert!(v["missing"].as_array().unwrap().is_empty());
}

#[test]
fn edgelist_input() {
    let out = run(&["check", "-", "--format", "edgelist"], "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hypothesis_holds"], false);
}

#[test]
fn find_cycle_reports_absence() {
    let out = run(&["find-cycle", "-", "--length", "5"], PETERSEN);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cycle"].as_array().unwrap().len(), 5);
    let out = run(&["find-cycle", "-", "--length", "10"], PETERSEN);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"], "none");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["profile", "-"], "not graph6 \u{1}\n").status.code(), Some(2));
    assert_eq!(run(&["find-cycle", "-", "--length", "9"], K5).status.code(), Some(2));
    let out = run(&["lemma-test", "--name", "nope", "--trials", "1", "--seed", "1"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lemma_test_and_hunt() {
    let out = run(
        &["lemma-test", "--name", "rotate-c1", "--trials", "50", "--seed", "7"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], 50);
    let out = run(&["hunt", "--n-max", "5", "--jobs", "1"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["counterexamples"].as_array().unwrap().is_empty());
    assert_eq!(run(&["hunt", "--n-max", "8"], "").status.code(), Some(2));
}
