use std::process::{Command, Output};

use serde_json::Value;

fn wgr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wgr")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const XY_YZ_X5: [&str; 4] = ["--ring", "x:2,y:4,z:5", "--ideal", "x*y; y*z; x^5"];

#[test]
fn gin_of_xy_yz_x5() {
    let mut args = vec!["gin", "--order", "wdegrevlex"];
    args.extend(XY_YZ_X5);
    let out = wgr(&args);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["generators"], serde_json::json!(["x^3", "x^2*z", "x*y^2", "y^3*z"]));
}

#[test]
fn lexify_reports_the_witness_degree() {
    let out = wgr(&["lexify", "--ring", "x:2,y:7", "--ideal", "x^7*y^2; x^14*y"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "not_lexifiable");
    assert_eq!(v["degree"], 42);
}

#[test]
fn lexify_success_lists_generators() {
    let out = wgr(&["lexify", "--ring", "x:2,y:7", "--ideal", "x^7*y^2; y^5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["generators"], serde_json::json!(["x^14", "x^7*y^3"]));
}

#[test]
fn hilbert_in_degree_zero_vanishes() {
    let mut args = vec!["hilbert", "--from", "0", "--to", "0"];
    args.extend(XY_YZ_X5);
    let out = wgr(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["table"], serde_json::json!([{ "degree": 0, "value": 0 }]));
}

#[test]
fn regularity_and_depth() {
    let mut args = vec!["reg"];
    args.extend(XY_YZ_X5);
    let v = json(&wgr(&args));
    assert_eq!(v["ideal"], 5);
    let mut args = vec!["depth"];
    args.extend(XY_YZ_X5);
    assert_eq!(json(&wgr(&args))["depth"], 1);
}

#[test]
fn betti_triples() {
    let mut args = vec!["betti"];
    args.extend(XY_YZ_X5);
    let v = json(&wgr(&args));
    assert_eq!(
        v["triples"],
        serde_json::json!([[0, 6, 1], [0, 9, 1], [0, 10, 1], [1, 11, 1], [1, 14, 1]])
    );
}

#[test]
fn stable_verdicts() {
    let out = wgr(&["stable", "--ring", "x:2,y:4,z:5", "--ideal", "x^3; x^2*z; x*y^2; y^3*z"]);
    assert_eq!(out.status.code(), Some(0));
    let mut args = vec!["stable"];
    args.extend(XY_YZ_X5);
    let out = wgr(&args);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["violation"].is_object());
}

#[test]
fn homogeneous_input_is_accepted() {
    let out = wgr(&["series", "--ring", "x:2,y:3", "--ideal", "x^3+y^2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_with_three() {
    let out = wgr(&["series", "--ring", "x:2,y:3", "--ideal", "x+y"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains('2') && err.contains('3'), "{err}");
    assert_eq!(
        wgr(&["series", "--ring", "x:2,y:3", "--ideal", "x*(y"]).status.code(),
        Some(3)
    );
    assert_eq!(wgr(&["nonsense"]).status.code(), Some(3));
    assert_eq!(wgr(&["gin", "--bogus-flag"]).status.code(), Some(3));
    assert_eq!(wgr(&["gin", "--ring", "x:0"]).status.code(), Some(3));
}

#[test]
fn input_file() {
    let dir = std::env::temp_dir().join(format!("wgr-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("input.txt");
    std::fs::write(&path, "# weights 2, 4, 5\nx:2,y:4,z:5\nx*y\ny*z\nx^5\n").unwrap();
    let out = wgr(&["gin", "--order", "wdegrevlex", "--input", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(
        json(&out)["generators"],
        serde_json::json!(["x^3", "x^2*z", "x*y^2", "y^3*z"])
    );
}

#[test]
fn output_is_reproducible() {
    for args in [
        vec!["gin", "--seed", "5"],
        vec!["polarize", "--seed", "5"],
        vec!["tfixed", "--seed", "5"],
    ] {
        let mut args = args;
        args.extend(XY_YZ_X5);
        let (a, b) = (wgr(&args), wgr(&args));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn text_format() {
    let mut args = vec!["gin", "--order", "wdegrevlex", "--format", "text"];
    args.extend(XY_YZ_X5);
    let out = wgr(&args);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "gin: (x^3, x^2*z, x*y^2, y^3*z)"
    );
}

#[test]
fn arithmetic_commands() {
    assert_eq!(json(&wgr(&["frobenius", "--ring", "x:2,y:7"]))["frobenius"], 5);
    assert_eq!(json(&wgr(&["gapbound", "--ring", "x:2,y:3"]))["gap_bound"], 1);
    let out = wgr(&[
        "stabilization",
        "--ring",
        "x:2,y:2,z:3",
        "--ideal",
        "x^3; x*y*z",
        "--max-degree",
        "60",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(wgr(&["--help"]).status.code(), Some(0));
}
