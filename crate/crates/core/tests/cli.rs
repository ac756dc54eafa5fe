use std::process::Command;

use serde_json::Value;

fn maxclass(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_maxclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn verify_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let run = maxclass(&[
        "verify", "--family", "d", "--n-min", "3", "--n-max", "4", "--checks", "all", "--seed", "9",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["report"]["seed"], 9);
    let entries = v["report"]["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["status"] != "fail"));
    assert!(v["header"]["elapsed_ms"].is_object());
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for name in ["a.json", "b.json"] {
        let out = dir.path().join(name);
        let run = maxclass(&[
            "verify", "--family", "q", "--n-min", "3", "--n-max", "4", "--checks",
            "inverse,exponent,conjugation", "--seed", "5", "--out", out.to_str().unwrap(),
        ]);
        assert!(run.status.success());
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        bodies.push(serde_json::to_string(&v["report"]).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
}

#[test]
fn text_format_and_empty_selection() {
    let run = maxclass(&["verify", "--family", "s", "--n-min", "4", "--n-max", "4", "--checks", "h_kernel", "--format", "text"]);
    assert!(run.status.success());
    let text = String::from_utf8_lossy(&run.stdout);
    assert!(text.contains("[h_kernel]") && text.contains("1 pass, 0 fail"), "{text}");
    let run = maxclass(&["verify", "--checks", ""]);
    assert!(run.status.success());
}

#[test]
fn unsupported_range_and_unknown_check() {
    let run = maxclass(&["verify", "--family", "all", "--n-min", "3", "--n-max", "9", "--checks", "lie_indices"]);
    assert_eq!(run.status.code(), Some(2));
    let run = maxclass(&["verify", "--family", "d", "--n-min", "3", "--n-max", "6", "--checks", "wreath_section"]);
    assert_eq!(run.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&run.stderr).contains("wreath_section"));
    let run = maxclass(&["explain", "no_such_check"]);
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn explain_known_checks() {
    let run = maxclass(&["explain", "order_of_A_ds"]);
    assert!(run.status.success());
    assert!(String::from_utf8_lossy(&run.stdout).contains("order 2^(n-1)"));
    let run = maxclass(&["explain", "quaternion_class"]);
    assert!(String::from_utf8_lossy(&run.stdout).contains("cl U(KG) = |G'|"));
}

#[test]
fn table_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wreath.json");
    let run = maxclass(&["table", "--family", "q", "--n", "4", "--kind", "wreath", "--export", path.to_str().unwrap()]);
    assert!(run.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["order"], 64);
    assert_eq!(v["mul_table"].as_array().unwrap().len(), 64 * 64);

    let path = dir.path().join("section.txt");
    let run = maxclass(&[
        "table", "--family", "d", "--n", "3", "--export", path.to_str().unwrap(), "--format", "text",
    ]);
    assert!(run.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("order 8"));

    let run = maxclass(&["table", "--family", "all", "--n", "3", "--export", path.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn indices_and_certificate() {
    let run = maxclass(&["indices", "--family", "s", "--n-min", "4", "--n-max", "5"]);
    let rows: Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(rows[1]["t_lower"], 9);
    let run = maxclass(&["certify", "--family", "q", "--n", "4"]);
    assert!(run.status.success());
    let cert: Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(cert["section_order"], 64);
    assert!(cert["isomorphism"].is_array());
}
