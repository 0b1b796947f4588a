use std::process::{Command, Output};

use serde_json::Value;

fn qverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qverify"))
        .args(args)
        .env_remove("QVERIFY_TOL")
        .env_remove("QVERIFY_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--out", "-"]);
    let o = qverify(&all);
    (
        serde_json::from_slice(&o.stdout).expect("json report"),
        o.status.code().unwrap(),
    )
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn list_has_one_row_per_identity() {
    let o = qverify(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 22);
    assert!(text.contains("Jacobi triple product identity"));
    assert!(rows.iter().all(|r| r.split_whitespace().count() > 4));
    let filtered = stdout(&qverify(&["list", "--filter", "recip"]));
    assert!(filtered.lines().skip(1).all(|l| l.contains("RECIP")));
    assert_eq!(filtered.lines().count() - 1, 4);
}

#[test]
fn explicit_jtp_point_passes() {
    let (v, code) = json(&["check", "JTP", "--q", "0.5", "--x", "0.3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["status"], "pass");
    assert_eq!(v["results"][0]["point"]["x"]["re"], "2.9999999999999999e-1");
}

#[test]
fn sampled_check_gives_requested_count() {
    let (v, code) = json(&["check", "RECIP7", "--seed", "7", "--samples", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 10);
    assert_eq!(v["summary"]["total"], 10);
}

#[test]
fn point_outside_domain_is_skipped() {
    let (v, code) = json(&[
        "check", "LAMBERT", "--q", "0.5", "--c", "0.5", "--u", "0.5", "--v", "0.7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["status"], "skipped");
    assert!(v["results"][0]["diagnostics"].as_str().unwrap().contains("not below"));
    assert_eq!(v["summary"]["skipped"], 1);
}

#[test]
fn failures_set_exit_status_one() {
    let o = qverify(&["check", "JTP", "--q", "0.5", "--x", "0.3", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL JTP"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["integrals", "--mode", "exact"][..],
        &["suite", "--samples", "0"],
        &["suite", "--only", "NOPE"],
        &["check", "JTP", "--x", "0.3"],
        &["suite", "--bogus"],
    ] {
        assert_eq!(qverify(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn environment_overrides_tolerance_and_jobs() {
    let o = Command::new(env!("CARGO_BIN_EXE_qverify"))
        .args(["check", "JTP", "--q", "0.5", "--x", "0.3", "--out", "-"])
        .env("QVERIFY_TOL", "0.001")
        .env("QVERIFY_JOBS", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["tolerance"], "1.0000000000000000e-3");
    assert_eq!(v["timing"]["jobs"], 3);
}

#[test]
fn reports_are_reproducible_across_job_counts() {
    let args = [
        "suite",
        "--only",
        "RECIP7,QMEHLER,SEARS_32",
        "--samples",
        "8",
        "--seed",
        "3",
    ];
    let (a, _) = json(&[&args[..], &["--jobs", "1"]].concat());
    let (b, _) = json(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(without_timing(a), without_timing(b));
}

#[test]
fn report_follows_schema() {
    let (v, _) = json(&["suite", "--only", "JTP,LAMBERT", "--samples", "4"]);
    for key in ["config", "results", "summary", "timing"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let results = v["results"].as_array().unwrap();
    let count = |s: &str| results.iter().filter(|r| r["status"] == s).count() as u64;
    assert_eq!(v["summary"]["pass"], count("pass"));
    assert_eq!(v["summary"]["fail"], count("fail"));
    assert_eq!(v["summary"]["skipped"], count("skipped"));
    assert_eq!(v["summary"]["total"], results.len() as u64);
    for r in results {
        for key in ["abs_err", "rel_err"] {
            let s = r[key].as_str().unwrap();
            let x: f64 = s.parse().unwrap();
            assert_eq!(format!("{x:.16e}"), s);
        }
        assert!(r["lhs"]["re"].as_str().unwrap().parse::<f64>().is_ok());
    }
}

#[test]
fn exact_check_at_explicit_point() {
    let (v, code) = json(&[
        "check",
        "RAM_RECIP",
        "--mode",
        "exact",
        "--a",
        "1/3",
        "--u",
        "2",
        "--v=-1/2",
    ]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["status"], "pass", "{r}");
    assert_eq!(r["lhs"].as_array().unwrap().len(), 40);
}

#[test]
fn integrals_pass_at_default_points() {
    let (v, code) = json(&["integrals", "--samples", "5"]);
    assert_eq!(code, 0, "{}", v["summary"]);
    assert_eq!(v["summary"]["fail"], 0);
}
