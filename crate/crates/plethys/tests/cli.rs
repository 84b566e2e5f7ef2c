//! End-to-end tests of the `plethys` binary: golden outputs, exit codes,
//! byte stability, and document round-trips through the CLI.

use std::process::{Command, Output};

use plethys::json;
use plethys_core::plethory::FinOrder;

fn plethys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethys"))
        .args(args)
        .env_remove("PLETHYS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn coadd_golden() {
    let out = plethys(&["coadd", "--poly", r#"{"basis":"binomial","coeffs":{"2":"1"}}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_str(&out),
        "{\"schema_version\":1,\"arity\":2,\"coeffs\":[{\"deg\":[0,2],\"c\":\"1\"},{\"deg\":[1,1],\"c\":\"1\"},{\"deg\":[2,0],\"c\":\"1\"}]}\n"
    );
}

#[test]
fn member_rejects_with_witness_and_exit_2() {
    let out = plethys(&[
        "member",
        "--arity",
        "2",
        "--poly",
        r#"{"arity":2,"terms":[{"exp":[1,0],"c":"1/2"},{"exp":[0,1],"c":"1/2"}]}"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["error"]["kind"], "NotIntegerValued");
    assert_eq!(doc["witness"], serde_json::json!(["1", "0"]));
}

#[test]
fn member_accepts_xy() {
    let out = plethys(&[
        "member",
        "--poly",
        r#"{"arity":2,"terms":[{"exp":[1,1],"c":"1"}]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["coeffs"], serde_json::json!([{"deg": [1, 1], "c": "1"}]));
}

#[test]
fn expand_round_trips_through_both_bases() {
    // X^2 -> binomial basis
    let out = plethys(&["expand", "--poly", r#"{"coeffs":["0","0","1"]}"#]);
    assert_eq!(out.status.code(), Some(0));
    let binomial = stdout_str(&out);
    assert_eq!(
        binomial,
        "{\"schema_version\":1,\"basis\":\"binomial\",\"coeffs\":{\"1\":\"1\",\"2\":\"2\"}}\n"
    );
    // and back
    let out = plethys(&["expand", "--poly", binomial.trim()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_str(&out),
        "{\"schema_version\":1,\"coeffs\":[\"0\",\"0\",\"1\"]}\n"
    );
}

#[test]
fn expand_rejects_non_member_with_exit_2() {
    let out = plethys(&["expand", "--poly", r#"{"coeffs":["0","1/2"]}"#]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["witness"], "1");
}

#[test]
fn compose_golden() {
    let c2 = r#"{"basis":"binomial","coeffs":{"2":"1"}}"#;
    let out = plethys(&["compose", "--poly", c2, "--with", c2]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_str(&out),
        "{\"schema_version\":1,\"basis\":\"binomial\",\"coeffs\":{\"3\":\"3\",\"4\":\"3\"}}\n"
    );
}

#[test]
fn wpc_check_on_gaussian_integers() {
    let order = json::to_output_string(&json::fin_order_to_json(&FinOrder::gaussian_integers()));
    let out = plethys(&["wpc-check", "--order", order.trim(), "--bound", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "no");
    assert_eq!(doc["witness"]["n"], 2);
    assert_eq!(doc["witness"]["value"], serde_json::json!(["-1/2", "-1/2"]));
}

#[test]
fn wpc_check_yes_on_integers() {
    let order = json::to_output_string(&json::fin_order_to_json(&FinOrder::integers()));
    let out = plethys(&["wpc-check", "--order", order.trim(), "--bound", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "yes-up-to-12");
}

#[test]
fn w_lower_reports_denominators() {
    let order = json::to_output_string(&json::fin_order_to_json(&FinOrder::gaussian_integers()));
    let out = plethys(&[
        "w-lower", "--order", order.trim(), "--bound", "3", "--iters", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["status"], "not-stabilized");
    let dens: Vec<String> = doc["denominators_seen"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert!(dens.contains(&"2".to_string()) && dens.contains(&"6".to_string()));
}

#[test]
fn w_upper_shrinks_gaussian_to_z() {
    let order = json::to_output_string(&json::fin_order_to_json(&FinOrder::gaussian_integers()));
    let out = plethys(&[
        "w-upper",
        "--order",
        order.trim(),
        "--candidates",
        r#"[["1","0"],["0","1"]]"#,
        "--bound",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["lattice"]["basis"], serde_json::json!([["1", "0"]]));
}

#[test]
fn w_upper_output_feeds_back_into_wpc_check() {
    let order = json::to_output_string(&json::fin_order_to_json(&FinOrder::gaussian_integers()));
    let out = plethys(&[
        "w-upper", "--order", order.trim(),
        "--candidates", r#"[["1","0"],["0","1"]]"#,
        "--bound", "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let result_order = stdout_str(&out);
    let out = plethys(&["wpc-check", "--order", result_order.trim(), "--bound", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "yes-up-to-10");
}

#[test]
fn theta_check_passes() {
    let out = plethys(&["theta-check", "--arity", "2", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["members_checked"], 25);
}

#[test]
fn axioms_pass_and_report() {
    let out = plethys(&["axioms", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "pass");

    let out = plethys(&["axioms", "--degree", "6", "--kind", "plethory", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "pass");
}

#[test]
fn witt_eval_example() {
    // C(7,2) = 21 = 1 mod 2
    let out = plethys(&[
        "witt-eval",
        "--prime", "2",
        "--exponent", "1",
        "--degree", "2",
        "--alpha", "7",
        "--precision", "4",
        "--poly", r#"{"basis":"binomial","coeffs":{"2":"1"}}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_str(&out),
        "{\"schema_version\":1,\"modulus\":\"2\",\"value\":\"1\"}\n"
    );
}

#[test]
fn witt_census_golden_and_budget_exit() {
    let out = plethys(&["witt-census", "--prime", "2", "--exponent", "1", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["count"], 8);
    assert_eq!(doc["stable_under_doubling"], true);
    assert_eq!(doc["min_precision"], 3);

    // budget exhaustion is exit 3
    let out = plethys(&[
        "witt-census", "--prime", "2", "--exponent", "1", "--degree", "4", "--budget", "16",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["error"]["kind"], "BudgetExceeded");
}

#[test]
fn budget_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_plethys"))
        .args(["witt-census", "--prime", "2", "--exponent", "1", "--degree", "4"])
        .env("PLETHYS_BUDGET", "16")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn torsion_check_primes() {
    for p in ["2", "3", "5"] {
        let out = plethys(&["torsion-check", "--prime", p]);
        assert_eq!(out.status.code(), Some(0));
        let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
        assert_eq!(doc["verdict"], "pass", "p = {p}");
    }
    // non-prime is a schema error
    let out = plethys(&["torsion-check", "--prime", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bin_fixed_and_compare() {
    let out = plethys(&["bin-fixed", "--prime", "2", "--bound", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["fixed_count"], 8);
    assert_eq!(doc["embedded_count"], 8);
    assert_eq!(doc["embedded_subset_of_fixed"], true);

    let out = plethys(&["bin-compare", "--prime", "2", "--bound", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["embedded_count"], 8);
    assert_eq!(doc["census_count"], 8);
}

#[test]
fn byte_stable_output() {
    let args = ["comul", "--poly", r#"{"basis":"binomial","coeffs":{"2":"1","5":"-3"}}"#];
    let a = plethys(&args);
    let b = plethys(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn unknown_subcommand_and_bad_schema_exit_1() {
    let out = plethys(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));

    let out = plethys(&["suite", "nope"]);
    assert_eq!(out.status.code(), Some(1));

    let out = plethys(&["coadd", "--poly", "{not json"]);
    assert_eq!(out.status.code(), Some(1));

    // missing document
    let out = plethys(&["coadd"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = plethys(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn quick_suite_passes_under_ten_seconds() {
    let start = std::time::Instant::now();
    let out = plethys(&["suite", "quick"]);
    let elapsed = start.elapsed();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["verdict"], "pass");
    assert!(elapsed.as_secs() < 10, "quick suite took {elapsed:?}");
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("plethys-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = plethys(&[
        "coadd",
        "--poly",
        r#"{"basis":"binomial","coeffs":{"1":"1"}}"#,
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"arity\":2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_plethys"))
        .args(["coadd", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(br#"{"basis":"binomial","coeffs":{"1":"1"}}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(doc["arity"], 2);
}
