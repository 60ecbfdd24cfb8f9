use std::process::{Command, Output};

fn friable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_friable"))
        .args(args)
        .env_remove("FRIABLE_TABLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = friable(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn psi_exact_example() {
    let out = friable(&["psi", "exact", "--x", "100", "--y", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"x\":100,\"y\":5,\"count\":34}\n");
}

#[test]
fn bound_prints_value_when_small() {
    let v = json(&["sunit", "bound", "--s", "1"]);
    assert_eq!(v, serde_json::json!({"s": 1, "exponent": 32, "value": "4294967296"}));
    let v = json(&["sunit", "bound", "--s", "1000"]);
    assert_eq!(v["exponent"], 16016);
    assert!(v.get("value").is_none());
}

#[test]
fn inverted_window_is_an_argument_error() {
    let out = friable(&["decomp", "verify", "--set", "0,1,3", "--n0", "3", "--n", "0", "--b", "0,1", "--c", "0,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(friable(&["psi", "exact", "--x", "100"]).status.code(), Some(2));
    assert_eq!(friable(&["nonsense"]).status.code(), Some(2));
    assert_eq!(friable(&["psi", "exact", "--x", "100", "--y", "five"]).status.code(), Some(2));
}

#[test]
fn table_limit_is_a_capacity_error() {
    let out = friable(&["--table-limit", "1000", "sieve", "gpf", "--n", "5000"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_friable"))
        .args(["sieve", "gpf", "--n", "5000"])
        .env("FRIABLE_TABLE_LIMIT", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn search_budget_exits_three_with_partial_report() {
    let out = friable(&["decomp", "search", "--set", "0,1,2,3,4,5,6,7,8,9,10,11,12", "--max-nodes", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "budget-exceeded");
}

#[test]
fn search_then_verify() {
    let v = json(&["decomp", "search", "--set", "2,3,4,5,6,7"]);
    assert_eq!(v["status"], "exhausted");
    let certs = v["certificates"].as_array().unwrap();
    assert!(!certs.is_empty());
    for c in certs {
        let join = |k: &str| c[k].as_array().unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let r = json(&["decomp", "verify", "--set", "2,3,4,5,6,7", "--b", &join("b"), "--c", &join("c")]);
        assert_eq!(r["valid"], true);
    }
    let v = json(&["decomp", "search", "--set", "1,2,4"]);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 0);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["sunit", "solve", "--u", "1", "--v", "-1", "--primes", "2,3,5", "--bound", "4"];
    let one = friable(&[&["--threads", "1"][..], &args].concat());
    let many = friable(&[&["--threads", "4"][..], &args].concat());
    let again = friable(&args);
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn solution_list_round_trips() {
    let v = json(&["sunit", "pairs", "--y", "5", "--d", "1", "--hi", "100"]);
    let list: friable_core::SolutionList = serde_json::from_value(v.clone()).unwrap();
    assert!(list.verify());
    assert_eq!(v["M"], 10);
    assert_eq!(v["certification"]["certified"], true);
    let back = serde_json::to_value(&list).unwrap();
    for (k, val) in back.as_object().unwrap() {
        assert_eq!(&v[k], val, "field {k}");
    }
}

#[test]
fn report_round_trips() {
    let v = json(&["report", "theorem1", "--y", "3", "--a1", "1", "--a2", "2", "--n0", "1", "--n", "10000"]);
    assert_eq!(v["contradiction_reached"], false);
    assert_eq!(v["case_label"], "out-of-hypothesis");
    let r: friable_core::PipelineReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&r).unwrap(), v);
}

#[test]
fn text_and_csv_formats() {
    let out = friable(&["--format", "text", "psi", "exact", "--x", "100", "--y", "5"]);
    assert_eq!(stdout(&out), "x: 100\ny: 5\ncount: 34\n");
    let out = friable(&["--format", "csv", "psi", "exact", "--x", "100", "--y", "5"]);
    assert_eq!(stdout(&out), "x,y,count\n100,5,34\n");
    let out = friable(&["--format", "text", "sieve", "window", "--lo", "1", "--hi", "10", "--threshold", "3"]);
    assert_eq!(stdout(&out), "1\n2\n3\n4\n6\n8\n9\n");
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    std::fs::write(&path, r#"{"format":"text","threshold":{"kind":"constant","y0":5},"table_limit":50}"#).unwrap();
    let cfg = path.to_str().unwrap();

    let out = friable(&["--config", cfg, "sieve", "window", "--lo", "20", "--hi", "30"]);
    assert_eq!(stdout(&out), "20\n24\n25\n27\n30\n");
    // flags override the file
    let out = friable(&["--config", cfg, "--format", "json", "sieve", "window", "--lo", "20", "--hi", "30"]);
    assert_eq!(stdout(&out), "[20,24,25,27,30]\n");
    let out = friable(&["--config", cfg, "sieve", "gpf", "--n", "60"]);
    assert_eq!(out.status.code(), Some(3));

    std::fs::write(&path, r#"{"bogus":1}"#).unwrap();
    assert_eq!(friable(&["--config", cfg, "sieve", "pi", "--y", "10"]).status.code(), Some(2));
}

#[test]
fn set_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    std::fs::write(&path, "4\n2\n3\n5\n6\n7\n").unwrap();
    let arg = format!("@{}", path.display());
    let v = json(&["decomp", "search", "--set", &arg, "--max-certs", "1"]);
    assert_eq!(v["status"], "certificate-limit");
    assert_eq!(v["space"]["N"], 7);
}

#[test]
fn classify_and_growth() {
    let v = json(&["report", "classify", "--log-n", "13.815510557964274", "--y", "3"]);
    assert_eq!(v["case_label"], "out-of-hypothesis");
    let v = json(&["decomp", "growth", "--a", "0,1", "--b", "0,1", "--m", "2", "--d-max", "5"]);
    assert!(v["scales"].is_array());
}
