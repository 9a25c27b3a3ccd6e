//! The binary as a black box: exit codes, JSON reports and replay.

use std::path::PathBuf;
use std::process::{Command, Output};

fn edcf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edcf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    edcf(args).status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("edcf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn exit_code_contract() {
    let pass = ["check", "edcf", "--logic", "KL", "--candidate", "kl-global", "--algebra", "K3"];
    let fail = ["check", "edcf-theta", "--algebra", "box5", "--class", "alpha12", "--logic", "ONE", "--candidate", "box-eq"];
    assert_eq!(code(&pass), 0);
    assert_eq!(code(&fail), 1);
    assert_eq!(code(&["check", "edcf", "--logic", "NOPE", "--candidate", "kl-global", "--algebra", "K3"]), 2);
    assert_eq!(code(&["check", "nonsense"]), 2);
    assert_eq!(code(&["--budget", "5", "check", "afep", "--logic", "PWK", "--testbed", "wk3-isp"]), 3);
    assert_eq!(
        code(&["check", "search", "--logic", "KL", "--generators", "K3", "--property", "afep", "--arity", "1"]),
        4
    );
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn fg_trace_on_l4() {
    let o = edcf(&["fg", "--algebra", "L4", "--logic", "LUK", "--gen", "⅔"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("{⅓,⅔,1}"), "{text}");
}

#[test]
fn json_report_replays_to_the_same_verdict() {
    let o = edcf(&[
        "--format", "json", "check", "fdc", "--logic", "PWK", "--algebra", "WK3", "--arity", "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["outcome"], "fail");
    assert_eq!(report["witness"]["tuple_labels"][0], "⟨½,0⟩");
    assert_eq!(report["witness"]["element_label"], "⟨1,0⟩");
    let path = scratch("fdc.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let r = edcf(&["replay", path.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0), "{}", stdout(&r));
    assert!(stdout(&r).contains("identical verdict"));
}

#[test]
fn tampered_report_is_flagged() {
    let o = edcf(&["--format", "json", "check", "afep", "--logic", "FEPFAIL", "--testbed", "fepfail"]);
    let mut report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    report["witness"]["tuple"] = serde_json::json!([0]);
    let path = scratch("tampered.json");
    std::fs::write(&path, serde_json::to_vec(&report).unwrap()).unwrap();
    let r = edcf(&["replay", path.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(1));
    assert!(stdout(&r).contains("verdict differs"));
}

#[test]
fn relabelling_keeps_the_verdict() {
    for seed in ["1", "7", "42"] {
        let o = edcf(&[
            "--seed", seed, "--format", "json", "check", "minrelcong", "--algebra", "box5", "--logic", "ONE",
            "--class", "alpha12", "--tuple", "a1,a2", "--element", "b",
        ]);
        assert_eq!(o.status.code(), Some(1));
        let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(report["witness"]["element_label"], "b");
        assert_eq!(report["witness"]["tuple_labels"], serde_json::json!(["a1", "a2"]));
    }
}

#[test]
fn reproduce_json_lists_steps() {
    let o = edcf(&["--format", "json", "reproduce", "m3-not-brouwerian"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let runs = v.as_array().cloned().unwrap_or_else(|| vec![v.clone()]);
    assert!(runs.iter().all(|r| r["ok"] == true));
    assert_eq!(code(&["reproduce", "no-such-example"]), 2);
}

#[test]
fn algebra_files_from_disk() {
    let path = scratch("c2.json");
    std::fs::write(
        &path,
        r#"{"name":"C2","size":2,"signature":[{"name":"and","arity":2},{"name":"or","arity":2},{"name":"one","arity":0}],
            "operations":{"and":[0,0,0,1],"or":[0,1,1,1],"one":[1]}}"#,
    )
    .unwrap();
    let o = edcf(&["filters", "--algebra", path.to_str().unwrap(), "--logic", "ORDER"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("{1}"));
}
