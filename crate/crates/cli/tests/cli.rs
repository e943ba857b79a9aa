//! End-to-end runs of the installed binary: output shapes, exact values,
//! exit codes, and plot determinism.

use sci_chern::{chern_of_tuple, dec6, fmt_q, DegreeTuple};
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sci-chern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_budget_five_is_bit_exact() {
    let text = stdout(&["enumerate", "--max-s1", "5"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,parts,s1,c1cubed,c1c2,c3,x,y,x_dec,y_dec");
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[1], "1,5,5,-1,-16,-86,1/16,43/8,0.0625000,5.37500");
    assert_eq!(lines[7], "5,1;1;1;1;1,5,-1,-6,-16,1/6,8/3,0.166667,2.66667");
}

#[test]
fn enumerate_json_matches_the_csv_values() {
    let text = stdout(&["enumerate", "--max-s1", "5", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0]["n"], 1);
    assert_eq!(rows[0]["parts"], "5");
    assert_eq!(rows[0]["x"], "1/16");
    assert_eq!(rows[0]["y_dec"], "5.37500");
}

#[test]
fn csv_rows_recompute_from_their_tuples() {
    let text = stdout(&["enumerate", "--max-s1", "6"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 7 + 11); // partitions of 5 and of 6
    for row in rows {
        let col: Vec<&str> = row.split(',').collect();
        let parts: Vec<u32> = col[1].split(';').map(|d| d.parse().unwrap()).collect();
        let t = DegreeTuple::new(parts).unwrap();
        let c = chern_of_tuple(&t).unwrap();
        assert_eq!(col[0], t.n().to_string());
        assert_eq!(col[2], t.s1().to_string());
        assert_eq!(col[3], fmt_q(&c.c1_cubed));
        assert_eq!(col[4], fmt_q(&c.c1c2));
        assert_eq!(col[5], fmt_q(&c.c3));
        assert_eq!(col[6], fmt_q(&c.x));
        assert_eq!(col[7], fmt_q(&c.y));
        assert_eq!(col[8], dec6(&c.x));
        assert_eq!(col[9], dec6(&c.y));
    }
}

#[test]
fn sub_ample_budget_is_a_usage_error() {
    let out = bin(&["enumerate", "--max-s1", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ample threshold"));
}

#[test]
fn verify_reduced_budget_passes_with_the_expected_shape() {
    let out = bin(&["verify", "--max-s1", "10", "--m-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&String> = rep.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 5);
    for k in [
        "schema_version",
        "config",
        "steps",
        "discrepancies",
        "witnesses",
    ] {
        assert!(rep.get(k).is_some(), "missing {k}");
    }
    let steps = rep["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 12);
    for s in steps {
        assert_eq!(s["pass"], true, "step {} failed", s["name"]);
    }
    assert_eq!(rep["discrepancies"].as_array().unwrap().len(), 2);
    assert_eq!(rep["witnesses"]["l0_on_line"], serde_json::json!(["5"]));
}

#[test]
fn verify_rejects_csv_format() {
    let out = bin(&[
        "verify", "--format", "csv", "--max-s1", "10", "--m-max", "20",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cone_check_member_carries_a_certificate() {
    let text = stdout(&["cone-check", "-86", "0", "1"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["equalities"], serde_json::json!(["5"]));
    assert_eq!(v["counterexample"], serde_json::Value::Null);
    assert_eq!(
        v["certificate"]["weights"],
        serde_json::json!(["744/229", "515/229", "0"])
    );
    assert_eq!(v["tail"]["bounded"], true);
}

#[test]
fn cone_check_eighteenth_bound_is_a_member() {
    let text = stdout(&["cone-check", "1/18", "0", "-1"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["tail"]["bounded"], true);
    assert_eq!(v["tail"]["limit_value"], "-2/9");
}

#[test]
fn cone_check_non_member_names_a_counterexample() {
    let out = bin(&["cone-check", "0", "0", "1"]);
    assert_eq!(out.status.code(), Some(0), "a decided verdict is a success");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["member"], false);
    assert_eq!(v["counterexample"], "5");
    assert_eq!(v["certificate"], serde_json::Value::Null);
}

#[test]
fn cone_check_rejects_garbage_coefficients() {
    let out = bin(&["cone-check", "x", "0", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plot_is_deterministic_with_corner_markers() {
    let a = stdout(&["plot", "--max-s1", "6"]);
    let b = stdout(&["plot", "--max-s1", "6"]);
    assert_eq!(a, b);
    assert_eq!(a.matches("class=\"corner\"").count(), 6);
    let small = stdout(&["plot", "--max-s1", "5"]);
    assert_eq!(small.matches("class=\"corner\"").count(), 4);

    let out = bin(&["plot", "--max-s1", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hull_report_budget_eight() {
    let text = stdout(&["hull", "--max-s1", "8", "--m-max", "8"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["clean"], true);
    assert_eq!(v["lower_chain"].as_array().unwrap().len(), 8);
    assert_eq!(v["matched_corners"].as_array().unwrap().len(), 8);
    assert_eq!(
        v["lower_chain"][0],
        serde_json::json!({"x": "1/16", "y": "43/8"})
    );
}

#[test]
fn out_flag_writes_the_file_instead_of_stdout() {
    let path = std::env::temp_dir().join(format!("sci-chern-cli-{}.csv", std::process::id()));
    let out = bin(&[
        "enumerate",
        "--max-s1",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("n,parts,s1,"));
    std::fs::remove_file(&path).ok();
}
