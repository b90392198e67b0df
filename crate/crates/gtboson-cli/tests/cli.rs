use std::process::{Command, Output};

use gtboson::basisgen::BasisPolynomial;
use gtboson::coupling::{CouplingTable, IsoscalarEntry};
use gtboson::gelfand::GelfandPattern;
use gtboson::polyengine::SqrtRational;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtboson")).args(args).env_remove("GTBOSON_OUTPUT_DIR").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn spec_examples() {
    assert_eq!(stdout(&["dim", "--group", "u3", "--label", "2,1,0"]), "8\n");
    assert_eq!(stdout(&["threej", "--j", "0.5,0.5,0", "--m", "0.5,-0.5,0"]), "1/1*sqrt(1/2)\n");
    assert_eq!(stdout(&["patterns", "--group", "u2", "--label", "0,0"]).lines().count(), 1);
}

#[test]
fn half_integer_spellings_agree() {
    let a = stdout(&["threej", "--j", "1/2,1/2,1", "--m", "1/2,-1/2,0"]);
    let b = stdout(&["threej", "--j", "0.5,0.5,1.0", "--m", "0.5,-0.5,0"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let bad_label = run(&["dim", "--group", "u3", "--label", "1,2,0"]);
    assert_eq!(bad_label.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_label.stderr).contains("h[1] ≥ h[2]"));
    let bad_pattern = run(&["basis", "--pattern", "2,1,0;3,1;2"]);
    assert_eq!(bad_pattern.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_pattern.stderr).contains("h_{1,3} ≥ h_{1,2}"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "--label", "a,b"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "--group", "v3", "--label", "1,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["threej", "--j", "0.25,0,0", "--m", "0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "--group", "u3", "--label", "1,0"]).status.code(), Some(1));
    assert_eq!(run(&["su3cg", "--label", "1,0,0", "--label", "1,0,0", "--label", "0,0,0"]).status.code(), Some(1));
}

#[test]
fn special_unitary_labels_are_shifted() {
    assert_eq!(stdout(&["dim", "--group", "su3", "--label", "2,1"]), "8\n");
    assert_eq!(stdout(&["patterns", "--group", "su3", "--label", "3,2,1"]), stdout(&["patterns", "--label", "2,1,0"]));
}

#[test]
fn json_round_trips() {
    let ps: Vec<GelfandPattern> =
        serde_json::from_str(&stdout(&["patterns", "--label", "2,1,0", "--format", "json"])).unwrap();
    assert_eq!(ps.len(), 8);
    let b: Vec<BasisPolynomial> =
        serde_json::from_str(&stdout(&["basis", "--label", "2,1,0", "--format", "json"])).unwrap();
    assert_eq!(b.len(), 8);
    let closed: Vec<BasisPolynomial> =
        serde_json::from_str(&stdout(&["basis", "--label", "2,1,0", "--method", "closed", "--format", "json"])).unwrap();
    assert!(b.iter().zip(&closed).all(|(x, y)| x.same_normalized(y)));
    let v: SqrtRational =
        serde_json::from_str(&stdout(&["threej", "--j", "1,1,0", "--m", "1,-1,0", "--format", "json"])).unwrap();
    assert_eq!(v.to_compact(), "1/1*sqrt(1/3)");
    let oct = ["--label", "2,1,0", "--label", "2,1,0", "--label", "2,1,0", "--format", "json"];
    let text = stdout(&[&["su3cg"], &oct[..]].concat());
    let t: CouplingTable = serde_json::from_str(&text).unwrap();
    assert_eq!(t.rho_count, 2);
    assert_eq!(serde_json::to_string_pretty(&t).unwrap() + "\n", text);
    let iso: Vec<IsoscalarEntry> = serde_json::from_str(&stdout(&[&["isoscalar"], &oct[..]].concat())).unwrap();
    assert!(!iso.is_empty());
}

#[test]
fn cg_normalization_scales_by_root_dimension() {
    let args = |n: &str| {
        stdout(&["su3cg", "--label", "1,0,0", "--label", "1,1,0", "--label", "0,0,0", "--normalization", n, "--format", "json"])
    };
    let a: CouplingTable = serde_json::from_str(&args("3j")).unwrap();
    let b: CouplingTable = serde_json::from_str(&args("cg")).unwrap();
    assert_eq!(a.entries, b.entries);
}

#[test]
fn deterministic_output() {
    let args = ["su3cg", "--label", "2,1,0", "--label", "2,1,0", "--label", "2,1,0", "--format", "csv", "--jobs", "4"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert!(a.starts_with("pattern1,pattern2,pattern3,rho,value\n"));
}

#[test]
fn pn1_methods_agree() {
    for p in ["3,1,0;2,1;1", "2,1,0;1,0;1", "3,2,1,0;3,1,0;2,1;1"] {
        assert_eq!(stdout(&["pn1", "--pattern", p]), stdout(&["pn1", "--pattern", p, "--method", "bruteforce"]));
    }
}

#[test]
fn config_output_dir_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("gt.toml");
    std::fs::write(&cfg, "format = \"csv\"\ngroup = \"u3\"\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(stdout(&["dim", "--label", "2,1,0", "--config", cfg]), "label,dimension\n\"[2,1,0]\",8\n");
    assert_eq!(stdout(&["dim", "--label", "2,1,0", "--config", cfg, "--format", "text"]), "8\n");
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "colour = \"red\"\n").unwrap();
    assert_eq!(run(&["dim", "--label", "1,0", "--config", bad.to_str().unwrap()]).status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_gtboson"))
        .args(["dim", "--label", "2,1,0", "--output", "d.txt"])
        .env("GTBOSON_OUTPUT_DIR", dir.path().join("out"))
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(dir.path().join("out/d.txt")).unwrap(), "8\n");
}

#[test]
fn selftest_filter() {
    let out = stdout(&["selftest", "--suite", "su2"]);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("PASS su2"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["selftest", "--suite", "gelfand", "--format", "json"])).unwrap();
    assert_eq!(json["ok"], true);
    assert_eq!(json["suites"].as_array().unwrap().len(), 2);
}
