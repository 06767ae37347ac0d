//! End-to-end checks of the `fracsum` binary and the report layer behind it.

use std::path::Path;
use std::process::{Command, Output};

use fracsum::report::{self, cmd_verify_with, Fault, OutputFormat, RunConfig, VerifyOptions};

fn fracsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn tables_match_golden_bytes() {
    for f in ["phi", "sigma"] {
        let md = fracsum(&["table", "--function", f]);
        assert_eq!(md.status.code(), Some(0));
        assert_eq!(stdout(&md), golden(&format!("table_{f}.md")));
        let csv = fracsum(&["table", "--function", f, "--format", "csv"]);
        assert_eq!(stdout(&csv), golden(&format!("table_{f}.csv")));
    }
}

#[test]
fn phi_table_flags_the_sign_of_the_thousand_row() {
    let out = fracsum(&["table", "--function", "phi", "--format", "csv"]);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("phi x=1000"), "{stderr}");
    assert!(stderr.contains("sign differs"));
}

#[test]
fn csv_round_trips_through_a_reader() {
    let out = fracsum(&["table", "--function", "phi,psi,sigma", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        ["fn", "x", "sum", "main", "error", "strategy"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 15);
    for row in &rows {
        let sum: f64 = row[2].parse().unwrap();
        let main: f64 = row[3].parse().unwrap();
        let error: f64 = row[4].parse().unwrap();
        assert!((sum - main - error).abs() <= 0.011, "{row:?}");
    }
    let psi10 = rows
        .iter()
        .find(|r| &r[0] == "psi" && &r[1] == "10")
        .unwrap();
    assert_eq!(&psi10[2], "39");
}

#[test]
fn json_rows_have_the_documented_keys() {
    let out = fracsum(&["table", "--function", "sigma", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for row in rows {
        for key in ["fn", "x", "sum", "main", "error", "strategy"] {
            assert!(row.get(key).is_some(), "missing {key} in {row}");
        }
    }
    assert_eq!(rows[4]["sum"], 2033577);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &[
            "table",
            "--function",
            "all",
            "--strategy",
            "all",
            "--xs",
            "10,500,2000",
        ][..],
        &[
            "scan",
            "--function",
            "sigma",
            "--xs",
            "10:100000:geometric(2)",
        ][..],
        &["constants"][..],
        &["verify", "--format", "json"][..],
    ] {
        assert_eq!(stdout(&fracsum(args)), stdout(&fracsum(args)), "{args:?}");
    }
}

#[test]
fn exit_codes_follow_the_failure_class() {
    assert_eq!(
        fracsum(&["table", "--function", "mu"]).status.code(),
        Some(2)
    );
    assert_eq!(fracsum(&["table", "--xs", "0"]).status.code(), Some(2));
    assert_eq!(
        fracsum(&["table", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fracsum(&["table", "--strategy", "decomposition", "--xs", "200000"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fracsum(&["table", "--strategy", "naive", "--xs", "600000000"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(fracsum(&["verify"]).status.code(), Some(0));
}

#[test]
fn out_writes_the_body_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sigma.csv");
    let out = fracsum(&[
        "table",
        "--function",
        "sigma",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("table_sigma.csv")
    );
}

#[test]
fn bench_skips_what_the_budgets_forbid() {
    let out = fracsum(&[
        "bench",
        "--function",
        "phi",
        "--xs",
        "1000,1000000",
        "--budget",
        "5000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    assert!(body.contains("skipped: exceeds sub-sum budget"), "{body}");
    assert_eq!(
        body.lines()
            .filter(|l| l.split(',').nth(2) == Some("1000"))
            .count(),
        3
    );
}

#[test]
fn injected_fault_is_caught_by_agreement() {
    let mut config = RunConfig::new(report::Command::Verify);
    config.output_format = OutputFormat::Markdown;
    let options = VerifyOptions {
        fault: Some(Fault::SigmaOffByOne { at: 97 }),
        budget: None,
    };
    let report = cmd_verify_with(&config, &options);
    assert_eq!(report.status.code(), 1);
    let line = report
        .body
        .lines()
        .find(|l| l.contains("strategy agreement"))
        .unwrap();
    assert!(
        line.contains("FAIL") && line.contains("sigma x=97"),
        "{}",
        report.body
    );
}
