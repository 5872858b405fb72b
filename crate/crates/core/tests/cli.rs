use std::process::{Command, Output};

use rconvex::bounds::BoundReport;
use rconvex::cli::{SearchResult, CSV_HEADER};

fn rconvex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rconvex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_satisfied_and_violated() {
    let ok = rconvex(&[
        "verify",
        "--theorem",
        "T2_1",
        "--f",
        "exp(x+y)",
        "--domain",
        "0,1,0,1",
        "--r",
        "1",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let rep: BoundReport = serde_json::from_str(&stdout(&ok)).unwrap();
    assert!((rep.lhs - 2.952492).abs() < 1e-6);
    assert!((rep.rhs - 3.194528).abs() < 1e-6);

    let bad = rconvex(&[
        "verify",
        "--theorem",
        "T2_1",
        "--f",
        "1",
        "--domain",
        "0,1,0,1",
        "--r",
        "0.5",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let rep: BoundReport = serde_json::from_str(&stdout(&bad)).unwrap();
    assert!((rep.slack + 5.0 / 9.0).abs() < 1e-12);
}

#[test]
fn input_errors_exit_one_with_message() {
    let cases: &[&[&str]] = &[
        &["verify", "--theorem", "T2_1", "--f", "log(x", "--r", "1"],
        &[
            "verify",
            "--theorem",
            "T2_1",
            "--f",
            "x+y",
            "--domain",
            "-1,1,-1,1",
            "--r",
            "1",
        ],
        &[
            "verify",
            "--theorem",
            "T1_3",
            "--f",
            "1",
            "--g",
            "1",
            "--r",
            "2",
            "--r2",
            "3",
        ],
        &["verify", "--theorem", "T2_1", "--f", "1", "--r", "0"],
        &["verify", "--theorem", "T9", "--f", "1", "--r", "1"],
        &[
            "sweep",
            "--theorem",
            "T2_1",
            "--f",
            "1",
            "--r-grid",
            "0.25:1:0",
        ],
        &[
            "verify",
            "--theorem",
            "T2_1",
            "--f",
            "1",
            "--r",
            "1",
            "--nodes",
            "1",
        ],
        &[
            "verify",
            "--theorem",
            "T2_1",
            "--f",
            "1",
            "--r",
            "1",
            "--format",
            "xml",
        ],
        &["verify", "--bogus"],
    ];
    for args in cases {
        let out = rconvex(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn csv_header_is_fixed() {
    let out = rconvex(&[
        "verify",
        "--theorem",
        "T1_3",
        "--f",
        "1",
        "--g",
        "1",
        "--r",
        "2",
        "--r2",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row.len(), 9);
    assert_eq!(row[0], "T1_3");
    assert_eq!(row[8], "true");

    let empty = rconvex(&[
        "search",
        "--theorem",
        "T2_1",
        "--r",
        "1",
        "--instances",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(stdout(&empty), format!("{CSV_HEADER}\n"));
}

#[test]
fn json_round_trip_preserves_slack_exactly() {
    for args in [
        &[
            "verify",
            "--theorem",
            "T2_4",
            "--f",
            "exp(x+y)",
            "--g",
            "x*y + 1",
            "--r",
            "1.5",
            "--r2",
            "2",
        ][..],
        &[
            "verify",
            "--theorem",
            "T1_1",
            "--f",
            "x^2 + 0.3",
            "--r",
            "0.7",
        ][..],
        &["chain", "--f", "exp(x*y)"][..],
    ] {
        let out = rconvex(args);
        let text = stdout(&out);
        let rep: BoundReport = serde_json::from_str(&text).unwrap();
        assert_eq!(rep.rhs - rep.lhs, rep.slack, "{args:?}");
        assert_eq!(rep.recompute_satisfied(), rep.satisfied);
        assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", text);
    }
}

#[test]
fn identical_specs_give_identical_bytes() {
    let args = [
        "search",
        "--theorem",
        "T2_4",
        "--r-grid",
        "0.5:2:4",
        "--seed",
        "7",
        "--instances",
        "40",
    ];
    let a = rconvex(&args);
    let b = rconvex(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    let other = rconvex(&[
        "search",
        "--theorem",
        "T2_4",
        "--r-grid",
        "0.5:2:4",
        "--seed",
        "8",
        "--instances",
        "40",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn search_reports_constant_violation_and_minimum() {
    let out = rconvex(&[
        "search",
        "--theorem",
        "T2_1",
        "--r-grid",
        "0.25:0.75:3",
        "--instances",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let res: SearchResult = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(res.instances_tried, 150);
    assert!(res
        .violations
        .iter()
        .any(|v| v.function == "1^2" && v.r == 0.5));
    for v in &res.violations {
        assert!(!v.report.satisfied);
        assert!(!v.report.recompute_satisfied());
    }
    let min = res.minimal_violation.unwrap();
    assert!(res
        .violations
        .iter()
        .all(|v| v.report.slack >= min.report.slack));

    let derived = rconvex(&[
        "search",
        "--theorem",
        "T2_1",
        "--r-grid",
        "0.25:0.75:3",
        "--instances",
        "50",
        "--variant",
        "derived",
    ]);
    assert_eq!(derived.status.code(), Some(0));

    let holder = rconvex(&[
        "search",
        "--theorem",
        "T2_7",
        "--r",
        "3",
        "--instances",
        "50",
        "--variant",
        "derived",
    ]);
    assert_eq!(holder.status.code(), Some(0));
}

#[test]
fn sweep_rows_are_ascending() {
    let out = rconvex(&[
        "sweep",
        "--theorem",
        "T2_1",
        "--f",
        "1",
        "--r-grid",
        "0.25:1:4",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    let rs: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(rs, vec![0.25, 0.5, 0.75, 1.0]);

    let derived = rconvex(&[
        "sweep",
        "--theorem",
        "T2_1",
        "--f",
        "1",
        "--r-grid",
        "0.25:1:4",
        "--variant",
        "derived",
    ]);
    assert_eq!(derived.status.code(), Some(0));
}

#[test]
fn chain_output() {
    let out = rconvex(&[
        "chain", "--f", "exp(x+y)", "--domain", "0,1,0,1", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let values: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let e = std::f64::consts::E;
    let expected = [
        e,
        e.sqrt() * (e - 1.0),
        (e - 1.0).powi(2),
        (e * e - 1.0) / 2.0,
        ((1.0 + e) / 2.0).powi(2),
    ];
    for (v, x) in values.iter().zip(expected) {
        assert!((v - x).abs() < 1e-12);
    }

    let flat = rconvex(&["chain", "--f", "x+y+1"]);
    let rep: BoundReport = serde_json::from_str(&stdout(&flat)).unwrap();
    assert!(rep.chain.unwrap().iter().all(|v| (v - 2.0).abs() < 1e-14));

    let concave = rconvex(&["chain", "--f", "(x+y+0.1)^0.5"]);
    assert_eq!(concave.status.code(), Some(2));
}

#[test]
fn check_command() {
    let pass = rconvex(&["check", "--f", "exp(x)", "--r", "0"]);
    assert_eq!(pass.status.code(), Some(0));
    let fail = rconvex(&[
        "check", "--f", "x^0.5", "--domain", "1,4", "--r", "1", "--format", "csv",
    ]);
    assert_eq!(fail.status.code(), Some(2));
    assert!(stdout(&fail).starts_with("mode,r,passed"));
    let coord = rconvex(&[
        "check",
        "--f",
        "x^2 + y^0.5",
        "--domain",
        "1,2,1,2",
        "--r",
        "1",
    ]);
    assert_eq!(coord.status.code(), Some(2));
    let joint = rconvex(&[
        "check", "--f", "exp(x+y)", "--r", "0", "--joint", "--points", "9",
    ]);
    assert_eq!(joint.status.code(), Some(0));
}
