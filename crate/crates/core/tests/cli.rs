use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_racah-bi-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

#[test]
fn passing_suite_exits_zero_with_json_report() {
    let out = run(&["--suite", "racah-abstract", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["suite"], "racah-abstract");
    assert_eq!(doc["seed"], 0);
    let reports = doc["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    let ids: Vec<&str> = reports.iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn numeric_parameters_give_the_casimir_value() {
    let out = run(&["--suite", "bi-standard", "--params", "rho1=1,rho2=3/2,r1=1/2,r2=2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let casimir = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["check_id"] == "bi.casimir.scalar")
        .expect("casimir check present");
    assert_eq!(casimir["value"], "59/4");
    assert_eq!(casimir["params"]["ρ2"], "3/2");
}

#[test]
fn identical_invocations_give_identical_output() {
    let args = ["--suite", "bispectral", "--degree", "4", "--trials", "3", "--seed", "7", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_format_prints_one_line_per_check() {
    let out = run(&["--suite", "su11", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.is_empty());
    assert!(text.lines().all(|l| l.split_whitespace().nth(1) == Some("pass")), "{text}");
}

#[test]
fn bad_configuration_exits_two() {
    for args in [
        &["--suite", "no-such-suite"][..],
        &["--params", "rho1=1/0"],
        &["--params", "nonsense=1"],
        &["--degree", "-1"],
        &["--trials", "0"],
        &["--format", "xml"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("--suite"));
}

#[test]
fn report_is_written_to_out_path() {
    let dir = std::env::temp_dir().join(format!("racah-bi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["--suite", "bi-abstract", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["suite"], "bi-abstract");
    std::fs::remove_dir_all(&dir).unwrap();
}
