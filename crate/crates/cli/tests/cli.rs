//! End-to-end behaviour of the `foxwright` binary.

use std::process::{Command, Output};

use foxwright_harness::case::{errors, verdict};
use foxwright_harness::{registry, Kind, SuiteConfig};
use num_complex::Complex64;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foxwright")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json_value(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn eval_riemann_zeta_two() {
    let o = run(&["eval", "riemann-zeta", "s=2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1.644934067"), "{}", stdout(&o));
    assert!(stdout(&o).contains("terms_used") && stdout(&o).contains("tail_estimate"));
}

#[test]
fn eval_polylog_at_zero() {
    let o = run(&["eval", "polylog", "s=2", "z=0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_value(&o);
    assert_eq!(v["value_re"].as_f64(), Some(0.0));
    assert_eq!(v["value_im"].as_f64(), Some(0.0));
}

#[test]
fn eval_degenerate_fox_wright() {
    let o = run(&["eval", "fox-wright", "upper=1:1", "lower=1:1", "z=0.7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_value(&o)["value_re"].as_f64().unwrap();
    assert!((v - 0.7f64.exp()).abs() <= 1e-15);
}

#[test]
fn eval_exit_codes() {
    assert_eq!(run(&["eval", "no-such-function", "s=2"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "hurwitz-zeta", "s=2"]).status.code(), Some(2));
    let o = run(&["eval", "riemann-zeta", "s=0.5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("s > 1"), "{}", stderr(&o));
    // a divergent-looking cap leaves the series unconverged
    let o = run(&["eval", "pfq", "upper=1", "lower=", "z=0.99", "--max-terms", "5"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert_eq!(run(&["eval", "riemann-zeta", "s=2", "--rel-tol", "0"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "riemann-zeta", "s=2", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn help_names_every_subcommand_and_function() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let help = stdout(&o);
    for word in [
        "eval", "verify", "list", "fox-wright", "pfq", "mathieu", "hurwitz-zeta", "riemann-zeta", "polylog", "lerch-phi",
        "extended-lerch",
    ] {
        assert!(help.contains(word), "help lacks {word}");
    }
}

#[test]
fn list_shows_every_case() {
    let o = run(&["list", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let entries = json_value(&o);
    let entries = entries.as_array().unwrap();
    assert_eq!(entries.len(), registry().len());
    assert!(entries.iter().any(|e| e["id"] == "laplace-gf-p1q1"));
    assert!(entries.iter().all(|e| !e["anchor"].as_str().unwrap().is_empty() && e["grid_size"].as_u64().unwrap() > 0));
}

#[test]
fn verify_single_case_and_empty_filter() {
    let o = run(&["verify", "--filter", "double-series-pi2-m2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let records = json_value(&o);
    assert_eq!(records.as_array().unwrap().len(), 1);
    assert_eq!(records[0]["pass"], true);
    assert!(stderr(&o).contains("passed 1 / failed 0 / skipped 0"));

    let o = run(&["verify", "--filter", "none-matching", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json_value(&o).as_array().unwrap().is_empty());
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn failing_identity_exits_nonzero() {
    // a relative tolerance override far below rounding makes equalities fail
    let o = run(&["verify", "--filter", "mathieu-gf-zeta2", "--rel-tol", "1e-300", "--abs-tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn full_report_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["verify", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("failed 0"));

    let records: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let records = records.as_array().unwrap();
    let cases = registry();
    assert_eq!(records.len(), cases.iter().map(|c| c.grid.len()).sum::<usize>());
    let config = SuiteConfig::default();
    let keys = ["id", "point", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "pass"];
    for r in records {
        let obj = r.as_object().unwrap();
        assert_eq!(obj.len(), keys.len());
        assert!(keys.iter().all(|k| obj.contains_key(*k)));
        let case = cases.iter().find(|c| c.id == r["id"]).unwrap();
        let f = |k: &str| r[k].as_f64().unwrap();
        let (abs_err, rel_err) = (f("abs_err"), f("rel_err"));
        if case.kind != Kind::InequalityChain {
            let (a, e) = errors(Complex64::new(f("lhs_re"), f("lhs_im")), Complex64::new(f("rhs_re"), f("rhs_im")));
            assert_eq!((a.to_bits(), e.to_bits()), (abs_err.to_bits(), rel_err.to_bits()), "{}", case.id);
        }
        let pass = verdict(case.kind, config.tolerance_for(case), abs_err, rel_err);
        assert_eq!(Some(pass), r["pass"].as_bool(), "{}", case.id);
    }
}

#[test]
fn config_file_sits_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    std::fs::write(&path, r#"{"format": "csv", "filter": "double-series-pi2-*"}"#).unwrap();
    let o = run(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("id,point,lhs_re"), "{out}");
    assert_eq!(out.lines().count(), 4);

    let o = run(&["verify", "--config", path.to_str().unwrap(), "--filter", "double-series-pi2-m3", "--format", "json"]);
    assert_eq!(json_value(&o).as_array().unwrap().len(), 1);

    assert_eq!(run(&["list", "--config", dir.path().join("missing.json").to_str().unwrap()]).status.code(), Some(4));
    std::fs::write(&path, r#"{"colour": "blue"}"#).unwrap();
    assert_eq!(run(&["list", "--config", path.to_str().unwrap()]).status.code(), Some(2));
}
