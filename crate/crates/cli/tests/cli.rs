use std::process::{Command, Output};

use cherednik_cli::Report;

fn cherednik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = cherednik(&all);
    (
        serde_json::from_slice(&o.stdout).expect("json report"),
        o.status.code().unwrap(),
    )
}

#[test]
fn jacobi_delta_fails_with_residual_six() {
    let o = cherednik(&["jacobi", "--c", "Delta"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("[fail] jacobi-residual"), "{text}");
    assert!(text.contains("    residual = 6\n"), "{text}");
    assert!(text.ends_with("status: fail\n"));
}

#[test]
fn jacobi_family_member_passes() {
    let (r, code) = json(&["jacobi", "--c", "Delta + 3*tau^2"]);
    assert_eq!(code, 0);
    assert_eq!(r.checks[0].witnesses[0].value, "0");
    assert_eq!(r.c, "3*tau^2 + Delta");
}

#[test]
fn text_layout() {
    let o = cherednik(&["commutator", "h", "e"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        format!("cherednik {} commutator", env!("CARGO_PKG_VERSION"))
    );
    assert_eq!(lines[1], "field: Q");
    assert_eq!(lines[2], "c: 0");
    assert!(lines[3].starts_with("[pass] commutator ("), "{}", lines[3]);
    assert!(lines[3].ends_with(" ms)"));
    assert_eq!(lines[4], "    [a, b] = 2*e");
    assert_eq!(lines[5], "status: pass");
    assert_eq!(lines.len(), 6);
}

#[test]
fn center_d_for_tau() {
    let (r, code) = json(&["center-d", "--c", "tau"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["d-central", "d-leading-term", "lift-formula"]);
}

#[test]
fn center_b_is_central() {
    let (r, code) = json(&["center-b", "--c", "Delta + 3*tau^2 + 1"]);
    assert_eq!(code, 0, "{r:?}");
}

#[test]
fn inadmissible_parameter_is_a_usage_error() {
    let o = cherednik(&["center-b", "--c", "Delta"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not admissible"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let o = cherednik(&["normalize", "x ** 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:4:"));
    let o = cherednik(&["jacobi", "--c", "h"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(cherednik(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn json_and_text_agree() {
    let args = ["alpha-m", "--c", "tau", "--max-degree", "2"];
    let text = stdout(&cherednik(&args));
    let (r, _) = json(&args);
    let rendered = r.to_string();
    let strip = |s: &str| {
        s.lines()
            .map(|l| match l.rfind(" (") {
                Some(i) if l.starts_with('[') => l[..i].to_string(),
                _ => l.to_string(),
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&text), strip(&rendered));
}

#[test]
fn out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = cherednik(&["fg", "Delta^2", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let r: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.command, "fg");
    assert_eq!(r.checks.len(), 2);
}

#[test]
fn modp_at_three() {
    let (r, code) = json(&["modp", "--field", "fp", "--p", "3", "--c", "tau"]);
    assert_eq!(code, 0);
    assert_eq!(r.field, "F_3");
    assert_eq!(r.checks.len(), 12);
    assert_eq!(cherednik(&["modp"]).status.code(), Some(2));
    assert_eq!(
        cherednik(&["modp", "--field", "fp", "--p", "101"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn pbw_failure_for_inadmissible_c() {
    let (r, code) = json(&["pbw-check", "--c", "Delta"]);
    assert_eq!(code, 1);
    assert!(r.checks[0].witnesses.len() > 2);
    let (_, code) = json(&["pbw-check", "--c", "tau"]);
    assert_eq!(code, 0);
}

#[test]
fn weights_and_vectors() {
    let (r, code) = json(&["finite-dim", "--c", "0", "--lambda", "2"]);
    assert_eq!(code, 0);
    assert!(
        r.checks[0].witnesses[0]
            .value
            .starts_with("finite dimensional"),
        "{r:?}"
    );
    let (r, _) = json(&["finite-dim", "--c", "0", "--lambda", "1/2"]);
    assert!(r.checks[0].witnesses[0].value.starts_with("not finite"));
    let (r, code) = json(&["maximal-vectors", "--c", "0", "--lambda", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r.checks[0].witnesses[1].value, "v");
}
