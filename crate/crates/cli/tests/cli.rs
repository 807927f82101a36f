use std::process::Command;

use serde_json::Value;
use skein_mcg_cli::{run, EXIT_INCONCLUSIVE, EXIT_INFINITE, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, Vec<Value>, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("skein-mcg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    let lines = String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every stdout line is JSON"))
        .collect();
    (code, lines, String::from_utf8(err).unwrap())
}

#[test]
fn dim_values() {
    for (p, d) in [("2", 1), ("4", 2), ("12", 132)] {
        let (code, lines, _) = call(&["dim", "--points", p]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(lines[0]["dim"], d);
    }
    assert_eq!(call(&["dim", "--points", "5"]).0, EXIT_USAGE);
}

#[test]
fn matrix_outputs() {
    let (code, lines, err) = call(&["matrix", "--points", "4", "--word", "1", "--symbolic"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        lines[0]["entries"],
        serde_json::json!([["-A^3", "A"], ["0", "A^-1"]])
    );
    assert!(err.contains("row"));

    let (_, lines, _) = call(&[
        "matrix",
        "--points",
        "4",
        "--word",
        "1 1 -2 -2",
        "--symbolic",
    ]);
    assert_eq!(lines[0]["entries"][1][1], "A^-8");

    let (_, lines, _) = call(&["matrix", "--points", "4", "--word", "", "--root", "12:1"]);
    assert_eq!(
        lines[0]["entries"],
        serde_json::json!([["1", "0"], ["0", "1"]])
    );

    assert_eq!(
        call(&["matrix", "--points", "4", "--word", "4", "--symbolic"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["matrix", "--points", "4", "--word", "1"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["matrix", "--points", "4", "--symbolic", "--root", "8:1"]).0,
        EXIT_USAGE
    );
}

#[test]
fn certify_exit_codes() {
    let (code, lines, _) = call(&[
        "certify",
        "--points",
        "4",
        "--word",
        "1 1 -2 -2",
        "--root",
        "12:1",
    ]);
    assert_eq!(code, EXIT_INFINITE);
    assert_eq!(lines[0]["witness"]["type"], "parabolic_trace");

    let (code, lines, _) = call(&["certify", "--points", "4", "--word", "", "--root", "20:1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines[0]["order"], 1);

    let (code, _, _) = call(&[
        "certify",
        "--points",
        "6",
        "--word",
        "1 1 -2 -2",
        "--root",
        "56:1",
    ]);
    assert_eq!(code, EXIT_INFINITE);

    assert_eq!(
        call(&["certify", "--points", "4", "--root", "12:2"]).0,
        EXIT_USAGE
    );
}

#[test]
fn checks() {
    let (code, lines, _) = call(&["verify-birman", "--points", "4", "--symbolic"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["expected_scalar"], "A^12");
    assert_eq!(
        call(&["verify-birman", "--points", "8", "--symbolic"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["verify-birman", "--points", "8", "--root", "12:1"]).0,
        EXIT_OK
    );

    let (code, lines, _) = call(&["check-power", "--points", "4", "--m", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines[0]["scalar"], "-1");
    assert_eq!(
        call(&["check-power", "--points", "4", "--m", "6", "--root", "8:1"]).0,
        EXIT_USAGE
    );

    let (code, lines, _) = call(&["rescale-check", "--points", "4", "--m", "9"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines[0]["sign"], -1);
    let (_, lines, _) = call(&["rescale-check", "--points", "4", "--m", "8"]);
    assert!(lines[0]["sign"].is_null());
}

#[test]
fn closure_and_explore() {
    let (code, lines, _) = call(&["closure", "--points", "4", "--root", "40:1"]);
    assert_eq!((code, lines[0]["order"].as_u64()), (EXIT_OK, Some(60)));
    let (code, lines, _) = call(&["closure", "--root", "12:1", "--cap", "2000"]);
    assert_eq!(
        (code, lines[0]["result"].as_str()),
        (EXIT_INCONCLUSIVE, Some("cap_exceeded"))
    );

    let (code, lines, _) = call(&["explore-m5", "--max-len", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["examined"], 0);
    let (_, lines, _) = call(&["explore-m5", "--max-len", "1"]);
    assert_eq!(lines.len(), 11);
}

#[test]
fn reproduce_output_is_deterministic() {
    let a = call(&["reproduce", "--m", "6..7", "--points", "4,6"]);
    let b = call(&["reproduce", "--m", "6..=7", "--points", "4,6"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
    assert_eq!(a.1.len(), 5);
    assert_eq!(a.1[0]["power_scalar"], "-1");
    assert_eq!(a.1[4]["pass"], true);
    assert_eq!(call(&["reproduce", "--m", "5..7"]).0, EXIT_USAGE);
    assert_eq!(call(&["reproduce", "--m", "9..7"]).0, EXIT_USAGE);
}

#[test]
fn out_flag_and_binary() {
    let dir = std::env::temp_dir().join(format!("skein-mcg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dim.jsonl");
    let status = Command::new(env!("CARGO_BIN_EXE_skein-mcg"))
        .args(["dim", "--points", "6", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let v: Value = serde_json::from_str(std::fs::read_to_string(&path).unwrap().trim()).unwrap();
    assert_eq!(v["dim"], 5);
    std::fs::remove_dir_all(&dir).unwrap();

    let bad = Command::new(env!("CARGO_BIN_EXE_skein-mcg"))
        .arg("--nope")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(3));
    let inf = Command::new(env!("CARGO_BIN_EXE_skein-mcg"))
        .args([
            "certify",
            "--points",
            "4",
            "--word",
            "1 1 -2 -2",
            "--root",
            "20:1",
        ])
        .output()
        .unwrap();
    assert_eq!(inf.status.code(), Some(10));
}
