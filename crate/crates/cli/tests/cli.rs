use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recipsum"))
        .args(args)
        .env_remove("RECIPSUM_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exact_text_prints_the_rational() {
    let o = run(&["exact", "--moment", "1", "--n", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "11/6\n");
}

#[test]
fn exact_json_carries_decimal_and_fraction() {
    let o = run(&["exact", "--moment", "2", "--n", "2,3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "exact");
    assert_eq!(v["moment"], 2);
    assert_eq!(v["rows"][0]["value"], "0.2500000000");
    assert_eq!(v["rows"][1]["num"], "85");
    assert_eq!(v["rows"][1]["den"], "36");
    assert_eq!(v["rows"][1]["enumeration_checked"], true);
}

#[test]
fn exact_above_the_cap_skips_enumeration() {
    let o = run(&["exact", "--n", "30", "--enum-cap", "20", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][0]["enumeration_checked"], false);
}

#[test]
fn compare_reproduces_the_first_moment_table() {
    let o = run(&["compare", "--moment", "1", "--n", "100,500,1000", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[0][1], "651539.7463");
    assert_eq!(&rows[0][3], "-5.846709795e-7");
    assert_eq!(&rows[1][1], "1.352867042e15");
    assert_eq!(&rows[1][2], "1.352867042e15");
    assert_eq!(&rows[2][2], "1.739106088e22");
    assert_eq!(&rows[2][3], "6.652204586e-23");
}

#[test]
fn compare_second_moment_at_100() {
    let o = run(&["compare", "--moment", "2", "--n", "100", "--digits", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,exact,asymptotic,ratio_minus_one\n100,1123000,1123000,-1.923e-6\n");
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = run(&["asym", "--moment", "2", "--n", "400", "--digits", "40", "--jobs", "1"]);
    let b = run(&["asym", "--moment", "2", "--n", "400", "--digits", "40", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mainterm_and_pn() {
    let o = run(&["mainterm", "--moment", "1", "--n", "1000", "--digits", "3"]);
    assert_eq!(stdout(&o), "1000 1.74e22\n");
    let o = run(&["pn", "--n", "10,100"]);
    assert_eq!(stdout(&o), "10 42\n100 190569292\n");
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["omega", "branch", "lq"] {
        let o = run(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["exact"][..],
        &["asym", "--moment", "3", "--n", "5"],
        &["exact", "--n", "3", "--digits", "0"],
        &["exact", "--n", "3", "--precision", "32"],
        &["exact", "--n", "3", "--format", "xml"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn computation_failures_exit_one() {
    let o = run(&["pn", "--n", "100", "--truncation", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(run(&["asym", "--n", "0"]).status.code(), Some(1));
}

#[test]
fn precision_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_recipsum"))
        .args(["pn", "--n", "5", "--format", "json"])
        .env("RECIPSUM_PRECISION", "128")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(v["precision_bits"], 128);
}
