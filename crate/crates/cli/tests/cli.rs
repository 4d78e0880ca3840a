use std::process::{Command, Output};

const PI: f64 = std::f64::consts::PI;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmo-verify"))
        .args(args)
        .output()
        .expect("spawn gmo-verify")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "--case", "GMO_M", "--params", "a=0"], 0),
        (&["verify", "--case", "gen_beta", "--params", "beta=-1.5"], 0),
        (&["verify", "--case", "S3_1"], 0),
        (&["verify", "--case", "NOT_A_CASE"], 2),
        (&["verify", "--case", "GMO_M", "--params", "a=zero"], 2),
        (&["verify", "--case", "GMO_M", "--params", "beta=1"], 2),
        (&["verify", "--case", "GMO_M", "--params", "a"], 2),
        (&["verify", "--params", "a=0"], 2),
        (&["verify", "--case", "GMO_M", "--format", "xml"], 2),
        (&["sweep", "--case", "F_LOG", "--param", "a", "--from", "0", "--to", "1", "--steps", "1"], 2),
        (&["sweep", "--case", "F_LOG", "--param", "beta", "--from", "0", "--to", "1", "--steps", "3"], 2),
        (&["sweep", "--case", "F_LOG", "--param", "a", "--from", "-1", "--to", "1", "--steps", "3"], 0),
        (&["zeta", "--s", "2", "--q", "1"], 0),
        (&["zeta", "--s", "1", "--q", "1"], 2),
        (&["zeta", "--s", "2", "--q", "-1"], 2),
        (&["zeta", "--s", "1.05", "--q", "1", "--route", "integral"], 2),
        (&["--tol", "-1", "list"], 2),
        (&["--max-evals", "0", "list"], 2),
        (&["list"], 0),
        (&["bogus"], 2),
    ];
    for (args, code) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn explicit_domain_violation_warns() {
    let o = run(&["verify", "--case", "GEN_BETA", "--params", "beta=-1.5"]);
    assert!(stdout(&o).contains("SKIPPED_DOMAIN"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn starved_budget_fails_the_run() {
    let o = run(&["--max-evals", "100", "--tol", "1e-14", "verify", "--case", "GMO_M"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NO_CONVERGENCE"));
}

#[test]
fn full_run_summary_line() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.ends_with("mismatch / 0 skipped"), "{last}");
    assert!(last.contains(" pass / 2 mismatch"), "{last}");
}

#[test]
fn sweeps_pass() {
    for (args, n) in [
        (["F_LOG", "a", "-2", "3", "11"], 11),
        (["N_FAMILY", "n", "1", "5", "5"], 5),
        (["GEN_BETA", "beta", "-0.9", "3", "8"], 8),
    ] {
        let o = run(&[
            "sweep", "--case", args[0], "--param", args[1], "--from", args[2], "--to", args[3],
            "--steps", args[4], "--format", "csv",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
        let statuses: Vec<String> = rdr.records().map(|r| r.unwrap()[10].to_string()).collect();
        assert_eq!(statuses.len(), n);
        assert!(statuses.iter().all(|s| s == "PASS"), "{statuses:?}");
    }
}

#[test]
fn zeta_routes() {
    let parse = |o: Output| stdout(&o).lines().next().unwrap().parse::<f64>().unwrap();
    let z2 = parse(run(&["zeta", "--s", "2", "--q", "1"]));
    assert!((z2 - PI * PI / 6.0).abs() < 1e-14);
    let em = parse(run(&["zeta", "--s", "0.5", "--q", "1", "--route", "em"]));
    let integral = parse(run(&["zeta", "--s", "0.5", "--q", "1", "--route", "integral"]));
    assert!((em - integral).abs() < 1e-8);
    // ζ(1/2) = -1.4603545088095868...
    assert!((em + 1.460_354_508_809_586_8).abs() < 1e-14);
    let zm1 = parse(run(&["zeta", "--s", "-1", "--q", "1"]));
    assert!((zm1 + 1.0 / 12.0).abs() < 1e-15);
    let o = run(&["zeta", "--s", "2", "--s-im", "1", "--q", "1"]);
    assert!(stdout(&o).trim().ends_with('i'));
}

#[test]
fn csv_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("r.csv");
    let json_path = dir.path().join("r.json");
    let base = ["sweep", "--case", "HURWITZ_REP", "--param", "alpha", "--from", "-2.5", "--to", "1.5", "--steps", "5"];
    let mut a: Vec<&str> = base.to_vec();
    a.extend(["--format", "csv", "--out", csv_path.to_str().unwrap()]);
    let mut b: Vec<&str> = base.to_vec();
    b.extend(["--format", "json", "--out", json_path.to_str().unwrap()]);
    assert!(run(&a).status.success());
    assert!(run(&b).status.success());

    let mut rdr = csv::Reader::from_path(&csv_path).unwrap();
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "case_id", "params", "lhs_re", "lhs_im", "lhs_err_est", "rhs_re", "rhs_im", "abs_diff",
            "rel_diff", "tol", "status", "n_evals", "wall_ms", "note"
        ]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();

    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    for key in ["tool_version", "timestamp", "config", "records"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), rows.len());
    for (row, rec) in rows.iter().zip(records) {
        for field in ["lhs_re", "lhs_im", "lhs_err_est", "rhs_re", "rhs_im", "abs_diff", "tol"] {
            let i = headers.iter().position(|h| h == field).unwrap();
            let text = &row[i];
            // identical 17-digit text, and the text round-trips
            assert_eq!(rec[field].to_string(), text, "{field}");
            let v: f64 = text.parse().unwrap();
            assert_eq!(format!("{v:.16e}").replace("e", "e+").replace("e+-", "e-"), text);
        }
        assert_eq!(rec["status"], row[10]);
        assert_eq!(rec["case_id"], row[0]);
    }
}

#[test]
fn out_is_the_only_file_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_gmo-verify"))
        .current_dir(dir.path())
        .args(["verify", "--case", "S3_7", "--format", "csv", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(o.status.success());
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(entries, vec![std::ffi::OsString::from("report.csv")]);
    // stdout carries only the summary
    assert_eq!(stdout(&o).trim(), "1 pass / 0 mismatch / 0 skipped");
}

#[test]
fn list_is_complete_and_stable() {
    let first = stdout(&run(&["list"]));
    assert_eq!(first, stdout(&run(&["list"])));
    let rows: Vec<&str> = first.lines().skip(1).collect();
    assert_eq!(rows.len(), 29);
    let gen = rows.iter().find(|r| r.starts_with("GEN_BETA ")).unwrap();
    assert!(gen.contains("Eq (5)") && gen.contains("Re β > −1"), "{gen}");
}

#[test]
fn selftest_is_deterministic() {
    let a = run(&["selftest"]);
    assert!(a.status.success());
    let text = stdout(&a);
    assert!(text.contains("gauss-product convergence: PASS"));
    assert!(text.contains("lobachevskii integral: PASS"));
    assert_eq!(text, stdout(&run(&["selftest"])));
}
