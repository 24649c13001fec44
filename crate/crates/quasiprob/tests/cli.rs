use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasiprob"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn example(name: &str) -> String {
    format!("{}/examples/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn unstable_conditioning_fails_with_a_hint() {
    let ws = example("standard-conditionals");
    let o = run(&["--workspace", &ws, "condition", "--valuation", "Q", "--on", "A=0"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("RelativisationUnstable"), "{err}");
    assert!(err.contains("use --as preprob"), "{err}");

    let o = run(&["--workspace", &ws, "condition", "--valuation", "Q", "--on", "A=0", "--as", "preprob"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("3/10") && out.contains("-3/10"), "{out}");
}

#[test]
fn conditional_values() {
    let ws = example("standard-conditionals");
    let o = run(&[
        "--workspace", &ws, "condition", "--valuation", "Q", "--on", "B=0", "--target", "A=1",
        "--format", "structured",
    ]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["sections"][0]["rows"][0]["value"], "1/3");
    assert_eq!(doc["sections"][1]["rows"][0]["value"], "2/3");
}

#[test]
fn frames_of_the_irrational_example() {
    let ws = example("sqrt2-pair");
    let o = run(&["--workspace", &ws, "--format", "structured", "frames", "--valuation", "P", "--include-top"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = doc["sections"][0]["rows"].as_array().unwrap();
    let names: Vec<&str> = rows.iter().map(|r| r["statement"].as_str().unwrap()).collect();
    assert_eq!(names, ["⊤", "a"]);
    assert_eq!(rows[1]["value"], "1/2 - 1/10*sqrt2");
}

#[test]
fn classification() {
    let ws = example("standard-conditionals");
    let class = |v: &str| {
        let o = run(&["--workspace", &ws, "--format", "structured", "classify", "--valuation", v]);
        let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let rows = doc["sections"][0]["rows"].clone();
        (rows[0]["value"].as_str().unwrap().to_string(), rows[1]["value"].as_str().unwrap().to_string())
    };
    assert_eq!(class("uniform"), ("probability".into(), "1".into()));
    assert_eq!(class("Q"), ("quasi-probability".into(), "1".into()));
    let f = example("sqrt2-pair");
    let o = run(&["--workspace", &f, "classify", "--valuation", "P"]);
    assert!(stdout(&o).contains("pre-probability"));
}

#[test]
fn bayes_and_total() {
    let ws = example("standard-conditionals");
    let o = run(&["--workspace", &ws, "bayes", "--valuation", "Q", "--on", "B=0", "--target", "A=1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("2/3"));
    let o = run(&["--workspace", &ws, "total", "--valuation", "mixed", "--partition", "by-A", "--on", "B=1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("unstable"));
    let o = run(&["--workspace", &ws, "query", "B0-given-A1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("3/5"));
}

#[test]
fn split_modes() {
    let ws = example("sqrt2-pair");
    for mode in ["canonical", "frame", "basis"] {
        let o = run(&["--workspace", &ws, "split", "--valuation", "P", "--mode", mode]);
        assert!(o.status.success(), "{mode}");
    }
}

#[test]
fn demos_and_checks_pass() {
    let o = run(&["demo", "all"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains(" NO"));
    let o = run(&["check", "--seed", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let ws = example("standard-conditionals");
    let o = run(&["--workspace", &ws, "check", "--valuation", "Q"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Q/additivity"));
}

#[test]
fn output_is_deterministic() {
    let ws = example("standard-conditionals");
    let args = ["--workspace", ws.as_str(), "--format", "structured", "check", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["--workspace", ws.as_str(), "eval", "--valuation", "Q"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["eval", "--valuation", "Q"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["demo", "missing"]).status.code(), Some(2));
    let ws = example("standard-conditionals");
    assert_eq!(run(&["--workspace", &ws, "eval", "--valuation", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["--workspace", "/nonexistent.json", "demo", "rtp-1"]).status.code(), Some(2));
    let o = run(&["--workspace", &ws, "eval", "--valuation", "Q", "--on", "C=1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("UnknownVariable"));
}
