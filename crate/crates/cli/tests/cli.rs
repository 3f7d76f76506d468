use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_autfree")).env_remove("AUTFREE_FORMAT").args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

const CX: &str = "x1->x1*[[x1,x2],[[x1,x2],x2]]; x2->x2";

/// One cheap invocation per subcommand.
const EVERY: &[&[&str]] = &[
    &["witt", "--rank", "3", "--degree", "6"],
    &["lyndon", "--rank", "2", "--degree", "4", "--as-series", "--as-word"],
    &["fox", "--word", "[x1,x2]", "--wrt", "1", "--truncate", "3"],
    &["jacobian", "--map", "x1->x1*[x1,x2]; x2->x2", "--reduced", "--degree", "2"],
    &["trace", "--map", CX, "--degree", "4"],
    &["bglm", "--map", CX, "--degree", "4"],
    &["generator", "--type", "K", "--rank", "3", "--i", "1", "--j", "2", "--k", "3"],
    &["span-rank", "--rank", "3", "--degree", "2", "--trace-image"],
    &["counterexample"],
    &["dims", "--rank", "3", "--max-degree", "6"],
    &["decompose", "--rank", "3", "--degree", "3", "--module", "M"],
    &["tables", "--which", "r2"],
    &["verify", "--suite", "tables"],
];

#[test]
fn witt_value() {
    assert_eq!(stdout(&["witt", "--rank", "3", "--degree", "6"]), "116\n");
    let v = json(&["witt", "--rank", "4", "--degree", "6"]);
    assert_eq!(v["value"], 670);
    assert_eq!(v["schema"], "autfree/1");
}

#[test]
fn lyndon_words() {
    let v = json(&["lyndon", "--rank", "3", "--degree", "6"]);
    assert_eq!(v["count"], 116);
    let v = json(&["lyndon", "--rank", "2", "--degree", "3", "--as-word"]);
    assert_eq!(v["words"][0]["bracket"], "[X1,[X1,X2]]");
    // [x1,[x1,x2]] with [u,v] = u⁻¹v⁻¹uv, reduced by hand
    assert_eq!(v["words"][0]["group_word"], "x1^-1*x2^-1*x1^-1*x2*x1*x2^-1*x1*x2");
}

#[test]
fn fox_derivative() {
    let v = json(&["fox", "--word", "[x1,x2]", "--wrt", "1"]);
    assert_eq!(v["derivative"], "-x1^-1 + x1^-1*x2^-1");
    let v = json(&["fox", "--word", "x1*x2", "--wrt", "2", "--truncate", "2"]);
    assert_eq!(v["derivative"], "x1");
    assert_eq!(v["magnus"], "1 + X1");
}

#[test]
fn jacobian_entries() {
    let v = json(&["jacobian", "--map", "x1->x1*x2; x2->x2"]);
    let e: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["entry"].as_str().unwrap()).collect();
    assert_eq!(e, ["1", "x1", "0", "1"]);
    let v = json(&["jacobian", "--map", "x1->x1*[x1,x2]; x2->x2", "--reduced", "--degree", "2"]);
    assert_eq!(v["truncation"], 4);
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn trace_and_bglm() {
    let v = json(&["trace", "--map", CX, "--degree", "4"]);
    assert_eq!(v["trace"], "2*X1*X2*X2*X2 - 3*X2*X1*X2*X2 + X2*X2*X1*X2");
    assert_eq!(v["balanced"], true);
    assert_eq!(json(&["bglm", "--map", CX, "--degree", "4"])["balanced"], true);
    // f_1 = [x2,[x2,x1]] has an unbalanced trace
    let v = json(&["bglm", "--map", "x1->x1*[x2,[x2,x1]]; x2->x2", "--degree", "2"]);
    assert_eq!(v["balanced"], false);
}

#[test]
fn generators() {
    let v = json(&["generator", "--type", "K", "--rank", "3", "--i", "1", "--j", "2", "--k", "3"]);
    assert_eq!(v["images"][0], "x1*x2^-1*x3^-1*x2*x3");
    assert_eq!(v["degree"], 1);
    let v = json(&["generator", "--type", "Kchain", "--rank", "4", "--i", "1", "--omega", "2,3", "--j", "4"]);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["trace"], "0");
    let v = json(&["generator", "--type", "L", "--rank", "4", "--i", "1", "--omega", "2", "--j", "3", "--k", "4"]);
    assert_eq!(v["degree"], 2);
    let v = json(&["generator", "--type", "T", "--rank", "3", "--word", "[x1,x2]"]);
    assert_eq!(v["images"][2], "x3*x1^-1*x2^-1*x1*x2");
    let v = json(&["generator", "--type", "A", "--rank", "2", "--word", "x1", "--word", "x2"]);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["trace"], "-X1*X2 + 2*X2*X1");
}

#[test]
fn span_rank_report() {
    let v = json(&["span-rank", "--rank", "3", "--degree", "2", "--trace-image"]);
    assert_eq!(v["level_ranks"], serde_json::json!([9, 18]));
    assert_eq!(v["trace_image_dim"], 3);
    assert_eq!(v["basis_indices"].as_array().unwrap().len(), 18);
}

#[test]
fn counterexample_report() {
    let v = json(&["counterexample"]);
    assert_eq!(v["balanced"], true);
    assert_eq!(v["in_l"], false);
    assert_eq!(v["in_inner_span"], false);
    assert_eq!((v["inner_span_rank"].as_u64(), v["augmented_rank"].as_u64()), (Some(3), Some(4)));
}

#[test]
fn dims_formats() {
    let md = stdout(&["dims", "--rank", "3", "--max-degree", "6", "--format", "markdown"]);
    let lines: Vec<&str> = md.lines().collect();
    assert_eq!(lines[0], "| n | 1 | 2 | 3 | 4 | 5 | 6 |");
    assert_eq!(lines[2], "| dim M_n | 9 | 24 | 54 | 144 | 348 | 936 |");
    assert_eq!(lines[3], "| dim L_n | 9 | 18 | 43 | 120 | 297 | 806 |");
    assert_eq!(lines[4], "| dim T_n | 6 | 15 | 27 | 66 | 117 | 279 |");
    assert_eq!(lines[5], "| dim J_n | 3 | 3 | 8 | 18 | 48 | 116 |");
    let csv = stdout(&["dims", "--rank", "4", "--max-degree", "3", "--table", "J", "--format", "csv"]);
    assert_eq!(csv, "n,quantity,value\n1,J,4\n2,J,6\n3,J,20\n");
    let csv = stdout(&["dims", "--rank", "3", "--max-degree", "6", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 1 + 6 * 4);
}

#[test]
fn decompose_report() {
    let v = json(&["decompose", "--rank", "3", "--degree", "3", "--module", "M"]);
    assert_eq!(v["total"], 54);
    let v = json(&["decompose", "--rank", "3", "--degree", "2", "--module", "J"]);
    assert_eq!(v["total"], 3);
}

#[test]
fn r2_tables() {
    let v = json(&["tables", "--which", "r2"]);
    let totals = |k: &str| v[k].as_array().unwrap().iter().map(|c| c["total"].as_u64().unwrap()).collect::<Vec<_>>();
    assert_eq!(totals("J"), [1, 1, 1, 1, 2, 3, 5, 8, 14, 25, 42, 75]);
    assert_eq!(totals("M"), [1, 2, 2, 4, 5, 10, 15, 28, 45, 84, 141, 264]);
    let md = stdout(&["tables", "--which", "r4", "--format", "markdown"]);
    assert!(md.contains("| dim J_n | 4 | 6 | 20 | 60 | 204 | 670 |"));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--suite", "tables"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 4);
    // the printed counterexample trace is not reproduced
    assert_eq!(run(&["verify", "--suite", "counterexample"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["witt", "--rank", "3"],
        &["witt", "--rank", "0", "--degree", "2"],
        &["witt", "--rank", "3", "--degree", "2", "--bogus"],
        &["verify", "--suite", "nope"],
        &["generator", "--type", "K", "--rank", "3", "--i", "1"],
        &["jacobian", "--map", "x1->x1", "--reduced"],
        &["dims", "--rank", "3", "--max-degree", "2", "--format", "yaml"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn precondition_failures_exit_1() {
    for args in [
        &["trace", "--map", "x1->x1*x2", "--degree", "2"][..],
        &["bglm", "--map", CX, "--degree", "1"],
        &["fox", "--word", "x1", "--wrt", "3", "--rank", "2"],
        &["fox", "--word", "x1*(", "--wrt", "1"],
        &["span-rank", "--rank", "5", "--degree", "6"],
        &["generator", "--type", "T", "--rank", "2", "--word", "x2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    for args in EVERY {
        for f in ["text", "json", "csv", "markdown"] {
            let mut a = args.to_vec();
            a.extend(["--format", f]);
            assert_eq!(stdout(&a), stdout(&a), "{a:?}");
        }
    }
}

#[test]
fn json_round_trips() {
    for args in EVERY {
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        let s = stdout(&a);
        let v: Value = serde_json::from_str(&s).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().take(2).collect();
        assert_eq!(keys, ["schema", "command"], "{a:?}");
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", s, "{a:?}");
    }
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_autfree"))
        .env("AUTFREE_FORMAT", "json")
        .args(["witt", "--rank", "2", "--degree", "6"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 9);
    let out = Command::new(env!("CARGO_BIN_EXE_autfree"))
        .env("AUTFREE_FORMAT", "json")
        .args(["witt", "--rank", "2", "--degree", "6", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.stdout, b"9\n");
}

#[test]
fn help_lists_every_subcommand() {
    let help = stdout(&["--help"]);
    for args in EVERY {
        assert!(help.contains(args[0]), "{}", args[0]);
    }
}
