//! End-to-end tests of the `orlicz` binary: exit codes, report content,
//! CSV output, and spec-file round-trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn orlicz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orlicz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("orlicz-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn exponents_of_power_log() {
    let out = orlicz(&["exponents", "--phi", "catalog(power_log, 2, 1)"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("q = 1.999999999999") || text.contains("q = 2.000000000000"),
        "{text}"
    );
    assert!(
        text.contains("p = 3.000000000000") || text.contains("p = 2.999999999999"),
        "{text}"
    );
}

#[test]
fn norm_from_moments_prints_cardano_value() {
    let out = orlicz(&[
        "norm",
        "--phi",
        "catalog(power_sum,2,3)",
        "--moments",
        "2:1.5707963267948966, 3:1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("1.4963575160"), "{text}");
}

#[test]
fn parse_error_exits_2() {
    let out = orlicz(&["exponents", "--phi", "catalog(power, 2"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("parse error"));

    let out = orlicz(&["exponents", "--phi", "catalogue(power, 2)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_error_exits_1() {
    // p < 1 parses but is not a Young function
    let out = orlicz(&["exponents", "--phi", "catalog(power, 0.5)"]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    assert!(stderr(&out).contains("p >= 1"), "{}", stderr(&out));
}

#[test]
fn validate_reports_broken_knot() {
    let out = orlicz(&[
        "validate",
        "--phi",
        "splice([(0,1): power(0.5,2,0)], [(1,2): power(1,1,-0.4)], [(2,inf): power(0.25,2,0.5)])",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("Value mismatch at knot"), "{text}");
    assert!(text.contains("NOT a valid Young function"), "{text}");

    let out = orlicz(&["validate", "--phi", "catalog(power_sum, 2, 3)"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("valid Young function"));
}

#[test]
fn modular_divergence_verdict() {
    let out = orlicz(&[
        "modular",
        "--phi",
        "catalog(power_sum,2,3)",
        "--integrand",
        "cauchy_power(0.25)",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("inf (divergence verdict)"));

    let out = orlicz(&[
        "modular",
        "--phi",
        "catalog(power_log,2,1)",
        "--integrand",
        "cauchy_power(0.25)",
    ]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("divergence verdict"));
}

#[test]
fn construct_target_round_trips_through_the_grammar() {
    let out = orlicz(&[
        "construct",
        "target",
        "--p1",
        "1.5",
        "--p",
        "2",
        "--p2",
        "3",
        "--r1",
        "1.2",
        "--r2",
        "4",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("measured exponents"), "{text}");
    let spec_line = text
        .lines()
        .find(|l| l.starts_with("spec: splice("))
        .expect("rendered splice");
    let rendered = spec_line.trim_start_matches("spec: ");
    // feed the rendered text back in: it must parse and validate cleanly
    let out2 = orlicz(&["validate", "--phi", rendered]);
    assert!(out2.status.success(), "{}", stdout(&out2));
}

#[test]
fn csv_output_for_curves() {
    let path = tmp("curve.csv");
    let out = orlicz(&[
        "exponents",
        "--phi",
        "catalog(power_sum,2,3)",
        "--csv",
        path.to_str().unwrap(),
        "--grid",
        "1e-4:1e4:64",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,value"));
    let first = lines.next().unwrap();
    let cols: Vec<&str> = first.split(',').collect();
    assert_eq!(cols.len(), 2);
    // 17 significant digits round-trip exactly
    let t: f64 = cols[0].parse().unwrap();
    assert!((t - 1e-4).abs() < 1e-18);
    std::fs::remove_file(&path).ok();
}

#[test]
fn spec_file_lookup_by_name() {
    let path = tmp("defs.orlicz");
    std::fs::write(
        &path,
        "# definitions\nsquare = catalog(power, 2)\nqlq = splice([(0,1): power(0.5,2,0)], [(1,2): power(1,1,-0.5)], [(2,inf): power(0.25,2,0.5)])\n",
    )
    .unwrap();
    let out = orlicz(&[
        "compare",
        "--phi",
        "qlq",
        "--psi",
        "square",
        "--spec-file",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("finite"), "{}", stdout(&out));
    std::fs::remove_file(&path).ok();
}

#[test]
fn grid_density_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_orlicz"))
        .args(["exponents", "--phi", "catalog(power, 2)"])
        .env("ORLICZ_GRID_DENSITY", "128")
        .output()
        .unwrap();
    assert!(out.status.success());

    let out = Command::new(env!("CARGO_BIN_EXE_orlicz"))
        .args(["exponents", "--phi", "catalog(power, 2)"])
        .env("ORLICZ_GRID_DENSITY", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gallery_exit_code_tracks_all_pass() {
    let path = tmp("gallery.csv");
    let out = orlicz(&["gallery", "--csv", path.to_str().unwrap()]);
    let text = stdout(&out);
    assert!(out.status.success(), "gallery failed:\n{text}");
    assert!(text.contains("ALL PASS"), "{text}");
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("name,expected,actual,abs_err,verdict"));
    assert!(csv.contains("PASS"));
    assert!(!csv.contains(",FAIL"), "gallery CSV contains failures");
    std::fs::remove_file(&path).ok();
}

#[test]
fn mixed_norm_with_profile_csv() {
    let path = tmp("profile.csv");
    let out = orlicz(&[
        "mixed-norm",
        "--phi",
        "catalog(power_sum,1,2)",
        "--integrand",
        "gauss_quad(3)",
        "--csv",
        path.to_str().unwrap(),
        "--grid",
        "1e-2:1e1:16",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("mixed norm = "), "{text}");
    assert!(text.contains("decomposition: L11"), "{text}");
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("t,value"));
    assert!(csv.lines().count() > 16);
    std::fs::remove_file(&path).ok();
}

#[test]
fn construct_tight_defaults_the_exponent() {
    let out = orlicz(&[
        "construct",
        "tight",
        "--base",
        "catalog(power_sum,2,3)",
        "--n",
        "100",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("r=2.5"), "{text}");
    assert!(text.contains("certified exponent gap"), "{text}");
}

#[test]
fn multiplicativity_flags_pure_power() {
    let out = orlicz(&["multiplicativity", "--phi", "catalog(power, 2)"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pure power: true"));

    let out = orlicz(&["multiplicativity", "--phi", "catalog(power_sum, 2, 3)"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pure power: false"));
}

#[test]
fn inclusions_for_power_log_shift() {
    let out = orlicz(&["inclusions", "--phi", "catalog(power_log_shift)"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("r-based ranges: p > 2.0000"), "{text}");
    assert!(
        text.contains("q < 1.9999") || text.contains("q < 2.0000"),
        "{text}"
    );
}
