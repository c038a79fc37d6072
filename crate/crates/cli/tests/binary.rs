#![allow(clippy::excessive_precision)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn problem(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("problems")
        .join(name)
}

fn fbvp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fbvp"))
        .args(args)
        .output()
        .expect("spawn fbvp")
}

fn run_into(file: &Path, out: &Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "run",
        file.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    fbvp(&args)
}

fn csv_row(text: &str, x: f64, r: f64) -> (f64, f64) {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,r,lower,upper"));
    for line in lines {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(v.len(), 4, "{line}");
        if v[0] == x && v[1] == r {
            return (v[2], v[3]);
        }
    }
    panic!("no row at x = {x}, r = {r}");
}

fn report_value(block: &str, key: &str) -> f64 {
    block
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in\n{block}"))
        .parse()
        .unwrap()
}

#[test]
fn homogeneous_case11_csv_origin_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_into(&problem("homogeneous.toml"), dir.path(), &["--case", "11"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = fs::read_to_string(dir.path().join("solution_11.csv")).unwrap();
    let (lo, up) = csv_row(&csv, 0.0, 0.0);
    assert!((lo + 0.5).abs() <= 1e-12, "{lo}");
    assert!((up - 1.0).abs() <= 1e-12, "{up}");
    assert_eq!(csv.lines().count(), 1 + 101 * 11);
}

#[test]
fn step_potential_all_cases() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_into(&problem("schrodinger_step.toml"), dir.path(), &[]);
    assert_eq!(out.status.code(), Some(0));
    let report = fs::read_to_string(dir.path().join("report.txt")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), report);

    let blocks: Vec<&str> = report.split("\n\n").collect();
    assert_eq!(blocks.len(), 4);
    for (block, tag) in blocks.iter().zip(["11", "22", "12", "21"]) {
        assert!(block.starts_with(&format!("case = {tag}\n")), "{block}");
        for line in block.lines() {
            assert!(line.contains(" = "), "{line}");
        }
    }
    // H1, H2 at r = 0 from the hand elimination with c1..c4 taken at x = 1
    let block = blocks[2];
    let h1 = report_value(block, "h1_r0");
    let h2 = report_value(block, "h2_r0");
    assert!(
        (h1 - 1.0822175803541546051).abs() <= 1e-9 * h1.abs(),
        "{h1}"
    );
    assert!(
        (h2 - 2.1748225600417356317).abs() <= 1e-9 * h2.abs(),
        "{h2}"
    );
}

#[test]
fn csv_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let file = problem("schrodinger_step.toml");
    run_into(&file, a.path(), &["--r-levels", "7", "--x-samples", "33"]);
    run_into(&file, b.path(), &["--r-levels", "7", "--x-samples", "33"]);
    for tag in ["11", "22", "12", "21"] {
        let name = format!("solution_{tag}.csv");
        let first = fs::read(a.path().join(&name)).unwrap();
        assert_eq!(first, fs::read(b.path().join(&name)).unwrap(), "{name}");
        assert_eq!(first.iter().filter(|&&c| c == b'\n').count(), 1 + 7 * 33);
    }
}

#[test]
fn empty_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("empty.toml");
    fs::write(&file, "").unwrap();
    let out = run_into(&file, &dir.path().join("out"), &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing section [ode]"));
}

#[test]
fn parse_error_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.toml");
    let text = fs::read_to_string(problem("homogeneous.toml"))
        .unwrap()
        .replace("L = 1", "L = 0");
    fs::write(&file, text).unwrap();
    let out = run_into(&file, &dir.path().join("out"), &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 8") && err.contains("L"), "{err}");
}

#[test]
fn all_cases_failing_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("degenerate.toml");
    // u'' + pi^2 u = 0 on [0, 1]: sin(pi x) is an eigenfunction
    let text = fs::read_to_string(problem("schrodinger_free.toml"))
        .unwrap()
        .replace("c = -1", &format!("c = {:?}", std::f64::consts::PI.powi(2)));
    fs::write(&file, text).unwrap();
    let out = run_into(&file, &dir.path().join("out"), &[]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        stdout.contains("status = failed\nreason = eigen_degenerate"),
        "{stdout}"
    );
}

#[test]
fn oracle_flag_fills_gap() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_into(&problem("homogeneous.toml"), dir.path(), &["--oracle"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(report_value(&stdout, "oracle_max_gap") <= 1e-5, "{stdout}");
}

#[test]
fn bad_flags_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = problem("homogeneous.toml");
    assert_eq!(
        run_into(&file, dir.path(), &["--case", "13"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run_into(&file, dir.path(), &["--r-levels", "1"])
            .status
            .code(),
        Some(2)
    );
}
