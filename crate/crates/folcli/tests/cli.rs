use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use folcli::{ReportDoc, EXIT_INPUT, EXIT_LIMIT, EXIT_OK};
use folinv::exactalg::rat::int;

fn folcli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_folcli"))
        .args(args)
        .current_dir(env!("CARGO_TARGET_TMPDIR"))
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn example_text_report() {
    let o = folcli(&["example", "run", "fk", "--k", "3", "--lambda", "1"]);
    assert_eq!(code(&o), EXIT_OK);
    let s = stdout(&o);
    assert!(s.contains("milnor_foliation = 15"), "{s}");
    assert!(s.contains("chi = 8"));
    assert!(s.contains("exit code 0"));
}

#[test]
fn structured_report_parses() {
    let o = folcli(&["--format", "structured", "local", "invariants", "--p", "2*y^2 + x^3", "--q", "-2*x*y", "--f", "x"]);
    assert_eq!(code(&o), EXIT_OK);
    let doc = ReportDoc::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.get("milnor_foliation"), Some(&int(5)));
    assert_eq!(doc.command, "local invariants");
}

#[test]
fn out_file() {
    let path = tmp("suzuki.json");
    let _ = fs::remove_file(&path);
    let o = folcli(&["--format", "structured", "--out", path.to_str().unwrap(), "example", "run", "suzuki"]);
    assert_eq!(code(&o), EXIT_OK);
    let doc = ReportDoc::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.get("milnor_b0"), Some(&int(17)));
}

#[test]
fn job_document() {
    let path = tmp("cubic.json");
    fs::write(
        &path,
        r#"{
  "kind": "global-check",
  "A": "3*x^2*z", "B": "-2*y*z^2", "C": "2*y^2*z - 3*x^3",
  "curve": "y^2*z - x^3",
  "points": ["0:0:1", "[0:1:0]"],
  "checks": ["soares"]
}"#,
    )
    .unwrap();
    let o = folcli(&["--format", "structured", "--input", path.to_str().unwrap(), "global", "check", "soares"]);
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = ReportDoc::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.verdicts.len(), 1);
    assert_eq!(doc.get("milnor_total"), Some(&int(7)));
}

#[test]
fn renamed_variables() {
    let path = tmp("renamed.json");
    fs::write(&path, r#"{"kind": "local-invariants", "vars": ["u", "v"], "P": "v", "Q": "-u", "f": "v"}"#).unwrap();
    let o = folcli(&["--format", "structured", "--input", path.to_str().unwrap(), "local", "invariants"]);
    assert_eq!(code(&o), EXIT_OK);
    let doc = ReportDoc::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.get("milnor_foliation"), Some(&int(1)));
}

#[test]
fn parse_error_points_at_the_offset() {
    let o = folcli(&["local", "invariants", "--p", "x^^2", "--q", "y"]);
    assert_eq!(code(&o), EXIT_INPUT);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("x^^2"), "{err}");
    assert!(err.contains('^'));
}

#[test]
fn input_errors() {
    assert_eq!(code(&folcli(&["local", "check", "no_such_check", "--p", "y", "--q", "-x", "--f", "y"])), EXIT_INPUT);
    assert_eq!(code(&folcli(&["local", "invariants", "--q", "y"])), EXIT_INPUT);
    assert_eq!(code(&folcli(&["example", "run", "fk", "--k", "2"])), EXIT_INPUT);
    assert_eq!(code(&folcli(&["frobnicate"])), EXIT_INPUT);
    // not invariant
    assert_eq!(code(&folcli(&["local", "invariants", "--p", "y", "--q", "-x", "--f", "y - x^2"])), EXIT_INPUT);
}

#[test]
fn limits_exit_three() {
    let o = folcli(&["--degree-cap", "3", "example", "run", "fk", "--k", "6"]);
    assert_eq!(code(&o), EXIT_LIMIT);
    assert!(stdout(&o).contains("error [limit]"));
}

#[test]
fn config_file_and_flag_precedence() {
    let cfg = tmp("caps.toml");
    fs::write(&cfg, "degree_cap = 3\nseed = 11\n").unwrap();
    let c = cfg.to_str().unwrap();
    let o = folcli(&["--config", c, "example", "run", "fk", "--k", "6"]);
    assert_eq!(code(&o), EXIT_LIMIT);
    let o = folcli(&["--config", c, "--degree-cap", "200", "--format", "structured", "example", "run", "fk", "--k", "6"]);
    assert_eq!(code(&o), EXIT_OK);
    let doc = ReportDoc::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.certificates.seed, 11);
    assert_eq!(doc.certificates.degree_cap, 200);
}

#[test]
fn example_list() {
    let o = folcli(&["example", "list"]);
    assert_eq!(code(&o), EXIT_OK);
    let s = stdout(&o);
    for name in ["suzuki", "fk --k 4", "alcantara --n 5", "cuspidal-cubic", "pencil"] {
        assert!(s.contains(name), "{name} missing from\n{s}");
    }
    let o = folcli(&["--format", "structured", "example", "list"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().is_some_and(|a| a.len() == 5));
}
