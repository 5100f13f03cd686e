use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn hup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hup")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn csv_abs(out: &Output) -> Vec<f64> {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().ends_with("re,im,abs"));
    lines.map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect()
}

fn diagnostic<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["diagnostics"].as_array().unwrap().iter().find(|d| d["name"] == name).map(|d| &d["value"]).unwrap()
}

#[test]
fn check_cone_one_over_root_three() {
    let out = hup(&["check-cone", "--family", "k-alpha", "--alpha", "0.57735", "--n", "3"]);
    assert_eq!(code(&out), 2);
    let r = json(&out);
    assert_eq!(r["operation"], "check-cone");
    assert_eq!(diagnostic(&r, "witnesses")[0]["degree"], 2);
    assert_eq!(diagnostic(&r, "armitage")["agrees"], true);
}

#[test]
fn check_cone_generic_alpha() {
    let out = hup(&["check-cone", "--family", "k-alpha", "--alpha", "0.9", "--n", "3", "--lmax", "12"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert!(diagnostic(&r, "witnesses").as_array().unwrap().is_empty());
    assert!(diagnostic(&r, "armitage")["min_ratio"].as_f64().unwrap() > 1e-4);
}

#[test]
fn check_cone_hyperplane_has_linear_witness() {
    let out = hup(&["check-cone", "--family", "hyperplane", "--n", "4", "--lmax", "3"]);
    assert_eq!(code(&out), 2);
    assert_eq!(diagnostic(&json(&out), "witnesses")[0]["degree"], 1);
}

#[test]
fn check_cone_usage_errors() {
    assert_eq!(code(&hup(&["check-cone", "--alpha", "1.5"])), 64);
    assert_eq!(code(&hup(&["check-cone", "--family", "k-alpha"])), 64);
    assert_eq!(code(&hup(&["check-cone", "--alpha", "0.5", "--n", "7"])), 64);
    assert_eq!(code(&hup(&["check-cone", "--alpha", "0.5", "--tol", "-1"])), 64);
    assert_eq!(code(&hup(&["check-cone", "--alpha", "0.5", "--lmax", "10", "--order", "8"])), 64);
    assert_eq!(code(&hup(&["check-cone", "--alpha", "0.5", "--format", "csv"])), 64);
    assert_eq!(code(&hup(&["check-cone", "--alpha", "0.5", "--count", "3"])), 64);
    assert_eq!(code(&hup(&["frobnicate"])), 64);
    assert_eq!(code(&hup(&["--help"])), 0);
}

#[test]
fn transform_constant_on_sphere_of_radius_pi() {
    let out = hup(&["transform", "--density", "constant", "--lambda", "sphere", "--radius", "3.141592653589793"]);
    assert_eq!(code(&out), 0);
    let abs = csv_abs(&out);
    assert_eq!(abs.len(), 64);
    assert!(abs.iter().all(|a| *a < 1e-8), "{abs:?}");
    // μ̂ = sin ρ / ρ on |ξ| = ρ
    let out = hup(&["transform", "--density", "constant", "--lambda", "sphere", "--radius", "2"]);
    assert!(csv_abs(&out).iter().all(|a| (a - 2f64.sin() / 2.0).abs() < 1e-12));
}

#[test]
fn transform_coordinate_on_hyperplane() {
    let out = hup(&["transform", "--density", "coordinate", "--index", "1", "--lambda", "hyperplane"]);
    assert_eq!(code(&out), 0);
    assert!(csv_abs(&out).iter().all(|a| *a < 1e-8));
}

#[test]
fn transform_points_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "x1,x2,x3\n0,0,0\n0,0,3.141592653589793").unwrap();
    let path = file.path().to_str().unwrap();
    let out = hup(&["transform", "--lambda", "points", "--points", path, "--format", "json", "--tol", "1e-8"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    let samples = diagnostic(&r, "samples").as_array().unwrap();
    // μ̂(0) of the constant density is the total mass 1
    assert!((samples[0]["re"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(samples[1]["abs"].as_f64().unwrap() < 1e-12);
    assert_eq!(r["verdict"], "does not vanish");
}

#[test]
fn transform_usage_errors() {
    let empty = tempfile::NamedTempFile::new().unwrap();
    let path = empty.path().to_str().unwrap();
    assert_eq!(code(&hup(&["transform", "--lambda", "points", "--points", path])), 64);
    assert_eq!(code(&hup(&["transform", "--lambda", "points", "--points", "/nonexistent/points.csv"])), 64);
    assert_eq!(code(&hup(&["transform", "--lambda", "paraboloid", "--n", "4"])), 64);
    assert_eq!(code(&hup(&["transform", "--density", "ylm", "--n", "4"])), 64);
    assert_eq!(code(&hup(&["transform", "--density", "coordinate", "--index", "5"])), 64);
    assert_eq!(code(&hup(&["transform", "--lambda", "k-alpha", "--alpha", "2"])), 64);
}

#[test]
fn verify_funk_hecke() {
    let out = hup(&["verify", "--suite", "funk-hecke", "--n", "3", "--lmax", "12"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["verdict"], "pass");
    assert!(diagnostic(&r, "max_residual").as_f64().unwrap() < 1e-8);
}

#[test]
fn verify_planewave_n4() {
    let out = hup(&["verify", "--suite", "planewave", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert!((diagnostic(&json(&out), "planewave.c_n").as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn verify_all_suites() {
    for n in ["2", "3", "5"] {
        assert_eq!(code(&hup(&["verify", "--suite", "all", "--n", n, "--lmax", "5"])), 0, "n = {n}");
    }
}

#[test]
fn verify_failing_tolerance_exits_two() {
    let out = hup(&["verify", "--suite", "spherical-mean", "--tol", "1e-30"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["verdict"], "fail");
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&hup(&["verify", "--suite", "bogus"])), 64);
    assert_eq!(code(&hup(&["verify"])), 64);
    assert_eq!(code(&hup(&["verify", "--suite", "lemma", "--n", "4"])), 64);
}

#[test]
fn same_seed_gives_identical_bytes() {
    for args in [
        &["verify", "--suite", "all", "--lmax", "4", "--seed", "7"][..],
        &["check-cone", "--alpha", "0.3", "--seed", "7"][..],
        &["transform", "--lambda", "paraboloid", "--density", "ylm", "--k", "2", "--l", "-1", "--seed", "7"][..],
    ] {
        let a = hup(args);
        let b = hup(args);
        assert_eq!(code(&a), code(&b));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = hup(&["check-cone", "--alpha", "0.3", "--seed", "1"]);
    let b = hup(&["check-cone", "--alpha", "0.3", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = hup(&["verify", "--suite", "planewave", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["operation"], "verify");
}

#[test]
fn coefficient_file_density() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // Y_1^0 only: odd in x_3, so μ̂ vanishes on {x_3 = 0}
    write!(file, r#"{{"n": 3, "K": 1, "coeffs": [{{"k": 1, "l": 0, "re": 1.0, "im": 0.0}}]}}"#).unwrap();
    let mut pts = tempfile::NamedTempFile::new().unwrap();
    writeln!(pts, "1,2,0\n-3,0.5,0\n0,0,2").unwrap();
    let out = hup(&[
        "transform",
        "--density",
        "coeffs",
        "--coeffs",
        file.path().to_str().unwrap(),
        "--lambda",
        "points",
        "--points",
        pts.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let abs = csv_abs(&out);
    assert!(abs[0] < 1e-12 && abs[1] < 1e-12);
    assert!(abs[2] > 0.1);
}
