//! Exit-code contract and output-format checks for the binary.

use std::process::Command;

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_overparity"))
}

#[test]
fn expand_prints_support() {
    let out = cli().args(["expand", "f1^2", "-n", "16"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[0, 2, 4, 10, 14]"), "{text}");
}

#[test]
fn parse_error_exits_2() {
    let out = cli().args(["expand", "f1^", "-n", "16"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn unknown_id_exits_2() {
    let out = cli().args(["verify", "--id", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corrupted_catalog_exits_1() {
    let dir = std::env::temp_dir().join("overparity-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"[{"id": "bad", "lhs": "f1^3*f3^3", "rhs": "f1^12 + q^2*f3^12",
            "min_trunc": 256, "anchor": "mutation"}]"#,
    )
    .unwrap();
    let out = cli()
        .args(["verify", "--all", "--catalog", path.to_str().unwrap(), "-n", "256"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL bad"), "{text}");
}

#[test]
fn verify_id_json_schema() {
    let out = cli()
        .args(["verify", "--id", "euler", "-n", "100", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["catalog"][0]["id"], "euler");
}

#[test]
fn density_budget_env_respected() {
    let out = cli()
        .args(["density", "-k", "2", "-M", "5000"])
        .env("OVERPARITY_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
}

#[test]
fn oracle_json_rows() {
    let out = cli()
        .args(["oracle", "-k", "4", "-i", "1", "-n", "5", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["brute_force"], 1); // n = 0 row
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn thm1_rejects_odd_k() {
    let out = cli().args(["thm1", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
