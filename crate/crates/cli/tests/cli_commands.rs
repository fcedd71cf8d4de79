use std::process::{Command, Output};

use serde_json::Value;

fn monoidrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoidrep")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = monoidrep(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn bruhat_of_four_cycle() {
    let v = json(&["bruhat", "--perm", "1234"]);
    assert_eq!(v["command"], "bruhat");
    assert_eq!(v["result"]["length"], 3);
    assert_eq!(v["result"]["one_line"], serde_json::json!([2, 3, 4, 1]));
    assert_eq!(json(&["bruhat", "--perm", "(13)", "--n", "4"])["result"]["length"], 3);
}

#[test]
fn green_on_is2() {
    let v = json(&["green", "--monoid", "is2"]);
    let classes = v["result"]["classes"].as_array().unwrap();
    let sizes: Vec<u64> = classes.iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![2, 4, 1]);
    assert_eq!(v["result"]["size_identity_holds"], true);
    let v = json(&["green", "--monoid", "is2", "--N", "trivial", "--K", "units"]);
    let total: u64 = v["result"]["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).sum();
    assert_eq!(total, 7);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["mackey", "--random", "4"][..],
        &["theta", "--random", "--seed", "11", "--battery"],
        &["irr", "--monoid", "is3"],
        &["symext", "--group", "c2", "--n", "2"],
    ] {
        let (a, b) = (monoidrep(args), monoidrep(args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn irr_and_semisimple() {
    let v = json(&["irr", "--monoid", "is3"]);
    assert_eq!(v["result"]["dimension_sum"], 34);
    assert_eq!(v["result"]["irreducibles"].as_array().unwrap().len(), 7);
    let v = json(&["semisimple", "--monoid", "nil3"]);
    assert_eq!(v["result"]["semisimple"], false);
    assert_eq!(v["result"]["cross_check"], true);
}

#[test]
fn theta_and_clifford() {
    let v = json(&["theta", "--regular", "s3", "--battery"]);
    assert_eq!(v["result"]["verdict"], true);
    assert_eq!(v["result"]["battery"]["unanimous"], true);
    let v = json(&["clifford", "--monoid", "s3", "--N", "gen:3", "--sigma", "1"]);
    assert_eq!(v["result"]["theta4"]["holds"], true);
    assert_eq!(v["result"]["normal_subring"]["holds"], true);
}

#[test]
fn symext_and_theta1() {
    let v = json(&["symext", "--group", "c2", "--n", "2"]);
    assert_eq!(v["result"]["size"], 4);
    let v = json(&["theta1", "--group", "c2", "--rep", "sign", "--n", "2", "--chi", "sign"]);
    assert_eq!(v["result"]["holds"], true);
    let v = json(&["theta1", "--group", "s3", "--rep", "standard", "--n", "2", "--certificate-only"]);
    assert_eq!(v["result"]["certificate"]["span_dim"], 10);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| monoidrep(args).status.code();
    assert_eq!(code(&["green", "--monoid", "nope"]), Some(2));
    assert_eq!(code(&["green", "--monoid", "is2", "--N", "gen:99"]), Some(2));
    assert_eq!(code(&["not-a-command"]), Some(2));
    assert_eq!(code(&["clifford", "--monoid", "s3", "--N", "gen:1"]), Some(3));
    assert_eq!(code(&["symext", "--group", "c3", "--n", "2"]), Some(4));
    assert_eq!(code(&["theta1", "--group", "s3", "--rep", "standard", "--n", "2"]), Some(4));
}

#[test]
fn monoid_from_file_and_parse_errors() {
    let dir = std::env::temp_dir().join(format!("monoidrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("c2.json");
    std::fs::write(&good, r#"{"table": [[0, 1], [1, 0]], "identity": 0}"#).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"table\": [[0, 1],").unwrap();
    let out = monoidrep(&["irr", "--monoid", good.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = monoidrep(&["irr", "--monoid", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_format_and_out_file() {
    let out = monoidrep(&["bruhat", "--perm", "1234", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("command: bruhat"));
    assert!(text.contains("length: 3"));
    let path = std::env::temp_dir().join(format!("monoidrep-out-{}.json", std::process::id()));
    let out = monoidrep(&["bruhat", "--perm", "12", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["length"], 1);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn timing_is_opt_in() {
    assert!(json(&["bruhat", "--perm", "12"]).get("wall_time_ms").is_none());
    assert!(json(&["bruhat", "--perm", "12", "--timing"])["wall_time_ms"].is_u64());
}
