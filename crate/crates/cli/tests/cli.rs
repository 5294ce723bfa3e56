use std::process::{Command, Output};

use serde_json::Value;

fn scpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scpp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn count_box_prints_value_as_string() {
    let out = scpp(&["count", "box", "--a", "2", "--b", "2", "--c", "2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "{\"value\":\"20\"}\n");
}

#[test]
fn enumerated_and_closed_counts_agree() {
    for kind in ["pp", "box"] {
        let v = json(&scpp(&["count", kind, "--a", "2", "--b", "3", "--c", "2"]));
        assert_eq!(v["value"], "50", "{kind}");
    }
    for kind in ["scpp", "sc"] {
        let v = json(&scpp(&["count", kind, "--a", "2", "--b", "2", "--c", "2"]));
        assert_eq!(v["value"], "4", "{kind}");
    }
}

#[test]
fn signed_count_splits_by_sign() {
    let v = json(&scpp(&["count", "signed", "--a", "2", "--b", "2", "--c", "2"]));
    let pos: i64 = v["positive"].as_str().unwrap().parse().unwrap();
    let neg: i64 = v["negative"].as_str().unwrap().parse().unwrap();
    let total: i64 = v["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(pos - neg, total);
    assert_eq!(pos + neg, 4);
}

#[test]
fn pfaffian_example() {
    let out = scpp(&["pfaffian", "--case", "even-even", "--a", "2", "--b", "2", "--c1", "2", "--c2", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["pfaffian"], "4");
    assert_eq!(v["product"], "4");
    assert_eq!(v["match"], true);
}

#[test]
fn verify_reports_are_reproducible() {
    let args = ["verify", "schurid2", "--gamma1", "2", "--gamma2", "1", "--alpha", "1", "--n", "2"];
    let first = scpp(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, scpp(&args).stdout);
    let v = json(&first);
    assert_eq!(v["match"], true);
    assert_eq!(v["lhs"], v["rhs"]);
    assert!(v.get("elapsed").is_none());
}

#[test]
fn evaluation_sweep_method_is_recorded() {
    let v = json(&scpp(&[
        "verify", "schurid1", "--gamma1", "1", "--gamma2", "1", "--alpha", "1", "--n", "1", "--method",
        "evaluation-sweep",
    ]));
    assert_eq!(v["method"], "evaluation-sweep");
    assert_eq!(v["match"], true);
}

#[test]
fn errors_exit_two_with_code() {
    let out = scpp(&["verify", "genenum", "--a", "2", "--b", "2", "--c1", "3", "--c2", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["code"], "bad_parity");

    let out = scpp(&["count", "box", "--a", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["code"], "usage");

    let out = scpp(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["code"], "usage");
}

#[test]
fn budget_is_enforced() {
    let out = scpp(&["--budget", "10", "count", "pp", "--a", "3", "--b", "3", "--c", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["code"], "budget_exceeded");
}

#[test]
fn mismatch_exits_one() {
    // exit status follows the match field
    let out = scpp(&["pfaffian", "--case", "a-odd", "--a", "1", "--b", "2", "--c1", "2", "--c2", "0"]);
    let v = json(&out);
    let expected = if v["match"] == true { 0 } else { 1 };
    assert_eq!(out.status.code(), Some(expected));
}

#[test]
fn sweep_skips_bad_parity_and_is_worker_independent() {
    let args = |w: &'static str| {
        vec!["sweep", "genenum", "--param", "a=0..2", "--param", "b=0..2", "--param", "c1=0..3", "--param", "c2=0..2", "--workers", w]
    };
    let one = scpp(&args("1"));
    let four = scpp(&args("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let v = json(&one);
    let s = &v["summary"];
    assert_eq!(s["total"], 3 * 3 * 4 * 3);
    assert_eq!(s["mismatched"], 0);
    assert!(s["skipped"].as_u64().unwrap() > 0);
    assert_eq!(
        s["matched"].as_u64().unwrap() + s["skipped"].as_u64().unwrap(),
        s["total"].as_u64().unwrap()
    );
    assert_eq!(v["reports"].as_array().unwrap().len(), 108);
}

#[test]
fn sweep_reads_config_file() {
    let dir = std::env::temp_dir().join(format!("scpp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.cfg");
    std::fs::write(&path, "# box formula on small boxes\nidentity = box\na = 0..2\nb = 0..2\nc = 1,2\n").unwrap();
    let out = scpp(&["sweep", "--config", path.to_str().unwrap(), "--param", "c=3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["summary"]["total"], 9);
    assert_eq!(v["summary"]["matched"], 9);

    let typo = scpp(&["sweep", "box", "--param", "a=1", "--param", "bb=1", "--param", "c=1"]);
    assert_eq!(typo.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("scpp-out-{}.json", std::process::id()));
    let out = scpp(&["count", "sc", "--a", "2", "--b", "2", "--c", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "{\"value\":\"4\"}\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn csv_and_text_formats() {
    let csv = scpp(&["--format", "csv", "count", "box", "--a", "1", "--b", "1", "--c", "1"]);
    assert_eq!(String::from_utf8_lossy(&csv.stdout), "value\n2\n");
    let text = scpp(&["count", "box", "--a", "1", "--b", "1", "--c", "1", "--format", "text"]);
    assert_eq!(String::from_utf8_lossy(&text.stdout), "value  2\n");
}

#[test]
fn schur_evaluation_matches_expansion() {
    let v = json(&scpp(&["schur", "--shape", "2,1", "--n", "3", "--point", "1,2,3"]));
    // s_(2,1)(1,2,3) = e1*e2 - e3 = 6*11 - 6
    assert_eq!(v["value"], "60");
    let oracle = json(&scpp(&["schur", "--shape", "2,1", "--n", "3", "--oracle"]));
    assert_eq!(v["digest"], oracle["digest"]);
    let skew = json(&scpp(&["schur", "--shape", "2,1", "--inner", "1", "--n", "2", "--point", "1,1"]));
    // s_(2,1)/(1) = h1^2 in two variables
    assert_eq!(skew["value"], "4");
}

#[test]
fn help_exits_zero() {
    assert!(scpp(&["--help"]).status.success());
    assert!(scpp(&["--version"]).status.success());
}
