use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

const HAMMING: &str =
    "field 2 1 0 1\ncode 4 7\n1 0 0 0 1 1 0\n0 1 0 0 1 0 1\n0 0 1 0 0 1 1\n0 0 0 1 1 1 1\n";
const REPETITION: &str = "# [3,1] repetition\nfield 2 1 0 1\ncode 1 3\n1 1 1\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agtrellis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("agtrellis-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn degree_eight_grid() {
    let out = run(&["gonality", "--plane-degree", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let grid = "\
 -1*   0    1    2    3    4    5
  6*   7    8    9   10   11   12
 13*  14*  15   16   17   18   19
 20*  21*  22   23   24   25   26
 27*  28*  29*  30   31   32   33
 34*  35*  36*  37   38   39   40
";
    assert!(text.ends_with(grid), "{text}");
    assert!(text.contains("jumps    -1 6 13 14 20 21 27 28 29 34 35 36\n"));
    assert!(text.contains("R(2g-2)  12\n"));
}

#[test]
fn small_plane_table_csv() {
    let out = run(&["gonality", "--plane-degree", "3", "--format", "csv"]);
    let rows: Vec<i64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(rows, vec![1, 1, 1, 2, 2, 2]);
}

#[test]
fn hyperelliptic_table() {
    let out = run(&["gonality", "--hyperelliptic-genus", "5", "--format", "csv"]);
    for line in stdout(&out).lines().skip(1) {
        let cols: Vec<i64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cols[1], (cols[0] + 1).div_euclid(2) + 1);
    }
}

#[test]
fn invalid_sequence_names_violation() {
    let path = temp_file("bad.gs", "genus 4\ngammas 0 3 4 6\n");
    let out = run(&["gonality", "--sequence", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("symmetry"), "{err}");
}

#[test]
fn gonality_sources_are_exclusive() {
    let out = run(&[
        "gonality",
        "--plane-degree",
        "3",
        "--hyperelliptic-genus",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hermitian_small_code() {
    let out = run(&[
        "hermitian",
        "--q",
        "2",
        "--m",
        "3",
        "--profile",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["code"]["n"], 8);
    assert_eq!(v["code"]["k"], 3);
    assert_eq!(v["bounds"]["exact_s"], 3);
    assert_eq!(v["bounds"]["wolf"], 3);
    assert_eq!(v["bounds"]["equality_region"], true);
    assert_eq!(v["profile"]["s_max"], 3);
}

#[test]
fn hermitian_mid_code_and_file() {
    let path = temp_file("h3.code", "");
    let out = run(&[
        "hermitian",
        "--q",
        "3",
        "--m",
        "14",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let b = &v["bounds"];
    assert_eq!(b["wolf"], 12);
    assert_eq!(b["r_bound"]["value"], 11);
    assert_eq!(b["gonality_bound"], 10);
    assert_eq!(b["goppa_like"], 9);
    assert_eq!(b["clifford"], 10);
    assert!(b["exact_s"].as_i64().unwrap() >= 11);

    let prof = run(&[
        "profile",
        "--code",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let p: serde_json::Value = serde_json::from_str(&stdout(&prof)).unwrap();
    assert_eq!(p["s_max"], b["exact_s"]);
}

#[test]
fn hermitian_rejects_abundant_degree() {
    assert_eq!(
        run(&["hermitian", "--q", "2", "--m", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["hermitian", "--q", "7", "--m", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn profile_and_permutation() {
    let rep = temp_file("rep.code", REPETITION);
    let out = run(&["profile", "--code", rep.to_str().unwrap()]);
    assert!(stdout(&out).contains("state vector = (0,1,1,0)"));

    let ham = temp_file("ham.code", HAMMING);
    let base = run(&[
        "profile",
        "--code",
        ham.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let ident = run(&[
        "profile",
        "--code",
        ham.to_str().unwrap(),
        "--permutation",
        "1,2,3,4,5,6,7",
        "--format",
        "json",
    ]);
    assert_eq!(base.stdout, ident.stdout);
    let v: serde_json::Value = serde_json::from_slice(&base.stdout).unwrap();
    assert_eq!(v["s_max"], 3);

    let bad = run(&[
        "profile",
        "--code",
        ham.to_str().unwrap(),
        "--permutation",
        "1,2,3",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn parse_errors_report_line() {
    let path = temp_file("broken.code", "field 2 1 0 1\ncode 2 3\n1 1 1\n1 x 1\n");
    let out = run(&["profile", "--code", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}

#[test]
fn search_exhaustive_and_deterministic() {
    let ham = temp_file("ham2.code", HAMMING);
    let out = run(&[
        "search",
        "--code",
        ham.to_str().unwrap(),
        "--strategy",
        "exhaustive",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["evaluations"], 5040);
    assert_eq!(v["exact"], true);
    assert_eq!(v["best_s"], 3);

    let h = temp_file("h3s.code", "");
    assert!(run(&[
        "hermitian",
        "--q",
        "3",
        "--m",
        "14",
        "--out",
        h.to_str().unwrap()
    ])
    .status
    .success());
    let args = [
        "search",
        "--code",
        h.to_str().unwrap(),
        "--budget",
        "1000",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["best_s"].as_i64().unwrap() >= 11);

    let zero = run(&["search", "--code", h.to_str().unwrap(), "--budget", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn bounds_for_abstract_parameters() {
    let out = run(&[
        "bounds",
        "--plane-degree",
        "7",
        "--n",
        "100",
        "--m",
        "60",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["k"], 40);
    assert_eq!(v["r_bound"]["value"], 35);
}

#[test]
fn verify_suites() {
    let jumps = run(&["verify", "--suite", "jumps"]);
    assert!(jumps.status.success());
    assert!(stdout(&jumps).contains("[-1, 6, 13, 14, 20, 21, 27, 28, 29, 34, 35, 36]"));

    let oracle = run(&["verify", "--suite", "r-oracle"]);
    assert!(oracle.status.success());
    let text = stdout(&oracle);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("DEVIATION")).count(),
        3
    );
    assert!(!text.contains("FAIL"));

    let a = run(&[
        "verify", "--suite", "duality", "--seed", "1", "--format", "json",
    ]);
    let b = run(&[
        "verify",
        "--suite",
        "duality",
        "--seed",
        "1",
        "--workers",
        "3",
        "--format",
        "json",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("300 random codes"));
}
