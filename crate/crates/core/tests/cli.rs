use std::process::Command;

use gw_hypersurface::cli;
use gw_hypersurface::gw::{invariants_table, GWTable};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("gwcy").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn dump_fundamental_period() {
    let (code, out, _) = run(&["dump", "--what", "I", "--n", "5", "--order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "q^0: 1\nq^1: 120\nq^2: 113400\n");
}

#[test]
fn dump_mu_and_mirror() {
    let (_, out, _) = run(&["dump", "--what", "mu", "--n", "5", "--order", "2"]);
    assert!(out.lines().any(|l| l == "q^1: 625"), "{out}");
    let (_, out, _) = run(&["dump", "--what", "mirror", "--n", "5", "--order", "1"]);
    assert!(out.lines().any(|l| l == "q^1: 770"), "{out}");
}

#[test]
fn dump_every_series_is_deterministic() {
    for what in ["I", "mirror", "mu", "F", "Q", "theorem2_rhs"] {
        let args = ["dump", "--what", what, "--n", "4", "--order", "3"];
        let (code, first, _) = run(&args);
        assert_eq!(code, 0, "{what}");
        assert!(!first.is_empty());
        assert_eq!(run(&args).1, first, "{what}");
    }
}

#[test]
fn invariants_json_round_trip() {
    let (code, out, _) = run(&["invariants", "--n", "5", "--order", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed = GWTable::from_json(&out).unwrap();
    assert_eq!(parsed, invariants_table(5, 4).unwrap());
    assert_eq!(parsed.to_json() + "\n", out);
}

#[test]
fn invariants_csv_round_trip() {
    let (code, out, _) = run(&["invariants", "--n", "5", "--order", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("d,N0,GW1_reduced,N1,n0,n1\n"));
    assert_eq!(
        GWTable::from_csv(5, &out).unwrap(),
        invariants_table(5, 3).unwrap()
    );
}

#[test]
fn invariants_for_other_dimensions_leave_quintic_columns_empty() {
    let (code, out, _) = run(&["invariants", "--n", "4", "--order", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "d,N0,GW1_reduced,N1,n0,n1\n1,,0,,,\n2,,0,,,\n3,,0,,,\n"
    );
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("gwcy-cli-test-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&[
        "invariants",
        "--order",
        "2",
        "--format",
        "json",
        "--output",
        p,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(
        GWTable::from_json(&written).unwrap(),
        invariants_table(5, 2).unwrap()
    );
}

#[test]
fn verify_prints_one_line_per_identity() {
    let (code, out, _) = run(&[
        "verify",
        "--suite",
        "props31,props32",
        "--n",
        "5",
        "--order",
        "4",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[..3].iter().all(|l| l.ends_with("PASS")), "{out}");
    assert_eq!(lines[3], "3 of 3 identities passed");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["dump", "--what", "bogus"],
        &["invariants", "--n", "0"],
        &["invariants", "--order", "0"],
        &["invariants", "--format", "xml"],
        &["frobnicate"],
        &["verify", "--suite", "special", "--order", "2"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_with_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("invariants") && out.contains("verify") && out.contains("dump"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gwcy");
    let ok = Command::new(bin)
        .args(["dump", "--what", "I", "--order", "1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "q^0: 1\nq^1: 120\n");
    let bad = Command::new(bin)
        .args(["dump", "--what", "nothing"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
