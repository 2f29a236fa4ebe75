use std::path::Path;
use std::process::{Command, Output};

fn gessel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gessel"))
        .args(args)
        .env_remove("GESSEL_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = gessel(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn count_json(extra: &[&str]) -> serde_json::Value {
    let mut args = vec!["--format", "json", "count"];
    args.extend_from_slice(extra);
    serde_json::from_str(ok(&args).trim()).unwrap()
}

#[test]
fn count_four_steps_to_origin_by_every_route() {
    for method in ["dp", "closed", "det", "solve", "multisum"] {
        // ā(ρ(5,5), 4) spans 56 indices, beyond the default chain limit.
        let v = count_json(&[
            "--m", "4", "--n1", "0", "--n2", "0", "--method", method, "--max-span", "64",
        ]);
        assert_eq!(v["F"], "11", "method {method}");
    }
}

#[test]
fn count_odd_length_to_origin_is_zero() {
    let v = count_json(&["--m", "3", "--n1", "0", "--n2", "0"]);
    assert_eq!(v["F"], "0");
    assert_eq!(ok(&["count", "--m", "3", "--n1", "0", "--n2", "0"]).trim(), "F(3;0,0) = 0  [dp]");
}

#[test]
fn count_boundary_points_agree_between_dp_and_det() {
    for (m, n1, n2) in [(5, 1, 0), (6, 2, 0), (6, 0, 2), (7, 0, 1), (10, 4, 0), (9, 0, 3)] {
        let (m, n1, n2) = (m.to_string(), n1.to_string(), n2.to_string());
        let base = ["--m", &m, "--n1", &n1, "--n2", &n2];
        let dp = count_json(&[&base[..], &["--method", "dp"]].concat());
        let det = count_json(&[&base[..], &["--method", "det"]].concat());
        assert_eq!(dp["F"], det["F"], "F({m};{n1},{n2})");
    }
}

#[test]
fn gessel_number_at_twenty_steps() {
    let v = count_json(&["--m", "20", "--n1", "0", "--n2", "0", "--method", "closed"]);
    assert_eq!(v["F"], "1946310467");
}

#[test]
fn inapplicable_methods_exit_two() {
    let interior = gessel(&["count", "--m", "5", "--n1", "1", "--n2", "1", "--method", "det"]);
    assert_eq!(interior.status.code(), Some(2));
    assert!(!interior.stderr.is_empty());

    let no_formula = gessel(&["count", "--m", "9", "--n1", "3", "--n2", "1", "--method", "closed"]);
    assert_eq!(no_formula.status.code(), Some(2));

    let too_wide = gessel(&["count", "--m", "2", "--n1", "0", "--n2", "0", "--method", "multisum"]);
    assert_eq!(too_wide.status.code(), Some(2));

    let no_fit = gessel(&["fit", "--family", "r", "--k", "0"]);
    assert_eq!(no_fit.status.code(), Some(2));

    assert_eq!(gessel(&["count", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "gessel", "--N", "16"][..],
        &["verify", "--suite", "cross_pipeline", "--k-max", "80"],
        &["verify", "--suite", "root", "--caps", "6,6,6"],
        &["verify", "--suite", "kernel", "--caps", "6,6,6"],
        &["verify", "--suite", "hkernel", "--caps", "6,6,6"],
        &["verify", "--suite", "recurrence_g", "--N", "20"],
    ] {
        let out = gessel(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(stdout(&out).contains("PASS"), "{args:?}");
    }
}

#[test]
fn verify_json_report_shape() {
    let out = ok(&["--format", "json", "verify", "--suite", "gessel", "--N", "5"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["suite"], "gessel");
    assert_eq!(v["passed"], true);
    assert_eq!(v["details"]["values"][5], "8004");
}

#[test]
fn universal_sequence_three() {
    assert_eq!(ok(&["universal", "--i", "3"]).trim(), "1, 5, 11, 19, 10, 2");
}

#[test]
fn fit_s1() {
    let out = ok(&["--format", "json", "fit", "--family", "s", "--k", "1"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["2", "5/2", "1/2"]));
    assert_eq!(v["held_out_ok"], true);
}

/// Nonzero entries of H^(24) off the unit superdiagonal, as displayed.
const H24_SPARSE: [(usize, usize, i64); 17] = [
    (3, 0, -1),
    (7, 3, -1),
    (8, 0, 1),
    (8, 4, -1),
    (12, 0, -1),
    (12, 7, -1),
    (13, 3, 1),
    (13, 8, -2),
    (14, 0, -1),
    (14, 4, 1),
    (14, 9, -1),
    (18, 3, -1),
    (18, 12, -1),
    (19, 0, 1),
    (19, 4, -1),
    (19, 7, 1),
    (19, 13, -2),
];

#[test]
fn hessenberg_dump_matches_display() {
    let out = ok(&["hessenberg", "--n", "1", "--dump"]);
    let rows: Vec<Vec<i64>> = out
        .lines()
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    let mut expected = vec![vec![0i64; 20]; 20];
    for r in 0..19 {
        expected[r][r + 1] = 1;
    }
    for (r, c, v) in H24_SPARSE {
        expected[r][c] = v;
    }
    assert_eq!(rows, expected);

    let det: serde_json::Value =
        serde_json::from_str(ok(&["--format", "json", "hessenberg", "--n", "1"]).trim()).unwrap();
    assert_eq!(det["det"], "2");
    assert_eq!(det["size"], 20);
}

fn table_lines(cache: Option<&Path>, m_max: &str) -> String {
    let mut args = vec![];
    if let Some(p) = cache {
        args.extend(["--cache", p.to_str().unwrap()]);
    }
    args.extend(["--format", "json", "table", "--m-max", m_max]);
    ok(&args)
}

#[test]
fn cache_never_changes_results() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested").join("walks.jsonl");

    let plain = table_lines(None, "8");
    let cold = table_lines(Some(&cache), "8");
    assert!(cache.exists());
    let warm = table_lines(Some(&cache), "8");
    assert_eq!(plain, cold);
    assert_eq!(plain, warm);

    // A larger request extends the cache; a smaller one is served from it.
    table_lines(Some(&cache), "12");
    assert_eq!(table_lines(Some(&cache), "8"), plain);
    assert!(!dir.path().join("nested").join("walks.jsonl.lock").exists());

    let c = ok(&["--cache", cache.to_str().unwrap(), "count", "--m", "12", "--n1", "0", "--n2", "0"]);
    assert_eq!(c.trim(), "F(12;0,0) = 88044  [dp]");
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_gessel"))
        .args(["count", "--m", "6", "--n1", "0", "--n2", "0"])
        .env("GESSEL_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "F(6;0,0) = 85  [dp]");
    assert!(dir.path().join("walks.jsonl").exists());
}

#[test]
fn corrupt_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("walks.jsonl");
    std::fs::write(&cache, "{not json\n").unwrap();
    let out = ok(&["--cache", cache.to_str().unwrap(), "count", "--m", "4", "--n1", "0", "--n2", "0"]);
    assert_eq!(out.trim(), "F(4;0,0) = 11  [dp]");
}

#[test]
fn csv_table_has_header() {
    let out = ok(&["--format", "csv", "table", "--m-max", "2"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m,n1,n2,F"));
    assert_eq!(lines.next(), Some("0,0,0,1"));
    assert_eq!(out.lines().count(), 1 + 1 + 2 + 5);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "--suite", "cross_pipeline", "--k-max", "60"];
    assert_eq!(ok(&args), ok(&args));
    let fit = ["--format", "json", "fit", "--family", "q", "--k", "1"];
    assert_eq!(ok(&fit), ok(&fit));
}
