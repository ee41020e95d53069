use std::process::{Command, Output};

fn opcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opcalc"))
        .args(args)
        .env_remove("OPCALC_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn pcoeff_both_methods() {
    for method in ["recurrence", "compositions"] {
        let out = opcalc(&["pcoeff", "--r", "3", "--d", "1", "--method", method]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), "3*n^2 + 3*n + 1\n");
    }
    assert_eq!(stdout(&opcalc(&["pcoeff", "--r", "3", "--d", "5"])), "0\n");
    assert_eq!(stdout(&opcalc(&["pcoeff", "--r", "3", "--d", "-1"])), "0\n");
}

#[test]
fn expand_shift_square() {
    let out = opcalc(&["expand", "--algebra", "shift", "--r", "2"]);
    assert_eq!(stdout(&out), "N^2 + (2*n + 1)*N + n^2\n");
    let raw = opcalc(&["expand", "--algebra", "shift", "--r", "2", "--raw"]);
    assert_eq!(stdout(&raw), "n^2 + 2*n*N + N^2 + N\n");
}

#[test]
fn expand_zero_is_one() {
    for algebra in ["comm", "q", "weyl", "shift"] {
        assert_eq!(stdout(&opcalc(&["expand", "--algebra", algebra, "--r", "0"])), "1\n");
    }
}

#[test]
fn negative_exponent_is_usage_error() {
    let out = opcalc(&["expand", "--algebra", "shift", "--r", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_opcalc"))
        .args(["expand", "--algebra", "weyl", "--r", "2"])
        .env("OPCALC_FORMAT", "latex")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "x^{2} + 2 xD + D^{2} + 1\n");
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_opcalc"))
        .args(["expand", "--algebra", "weyl", "--r", "2", "--format", "text"])
        .env("OPCALC_FORMAT", "latex")
        .output()
        .unwrap();
    assert_eq!(stdout(&flag_wins), "x^2 + 2*x*D + D^2 + 1\n");
}

#[test]
fn json_output_parses() {
    let out = stdout(&opcalc(&["expand", "--algebra", "q", "--r", "3", "--format", "json"]));
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["algebra"], "q");
    assert_eq!(doc["terms"].as_array().unwrap().len(), 4);
    assert_eq!(doc["terms"][1]["coeff"]["qpoly"], serde_json::json!(["1", "1", "1"]));
}

#[test]
fn normalize_relations() {
    let out = opcalc(&["normalize", "--algebra", "shift", "N*n"]);
    assert_eq!(stdout(&out), "(n + 1)*N\n");
    let out = opcalc(&["normalize", "--algebra", "q", "y^2*x"]);
    assert_eq!(stdout(&out), "q^2*x*y^2\n");
    let out = opcalc(&["normalize", "--algebra", "weyl", "D^2*x"]);
    assert_eq!(stdout(&out), "x*D^2 + 2*D\n");
}

#[test]
fn normalize_reports_offset() {
    let out = opcalc(&["normalize", "--algebra", "weyl", "x^-1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("at byte 2"), "{err}");
    assert!(err.contains("    ^"), "{err}");

    let out = opcalc(&["normalize", "--algebra", "shift", "N + x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn components_both_conventions() {
    let k = stdout(&opcalc(&["components", "--r", "4", "--k", "1"]));
    let layers = stdout(&opcalc(&["components", "--r", "4", "--layers", "2"]));
    assert_eq!(k, layers);
    let lines: Vec<&str> = k.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("degree 4: "));
    assert_eq!(lines[1], "degree 3: 6*N^3 + 12*n*N^2 + 6*n^2*N");
}

#[test]
fn infer_recovers_m2() {
    let out = opcalc(&["infer", "--m", "2", "--samples", "6,7,8,9,10", "--holdout", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q[0](r) = 3/4*r - 5/4"), "{text}");
    assert!(text.contains("q[1](r) = 1"), "{text}");
}

#[test]
fn infer_rejects_small_samples() {
    let out = opcalc(&["infer", "--m", "3", "--samples", "4,5,6,7", "--holdout", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = opcalc(&["verify", "--algebra", "shift", "--r", "6", "--trials", "10", "--seed", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("10/10 trials passed"));
    let json = opcalc(&["verify", "--algebra", "comm", "--r", "5", "--trials", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(doc["trials"].as_array().unwrap().len(), 3);
}

#[test]
fn bench_prints_table() {
    let out = stdout(&opcalc(&["bench", "--r-max", "3"]));
    assert_eq!(out.lines().count(), 5);
}
