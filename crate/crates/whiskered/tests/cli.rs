//! End-to-end checks of the command-line surface: generate, validate, check,
//! commutators and bracket, including identifier resolution and output
//! formats.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_whiskered"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("whiskered-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn generate(family: &str, param: &str, file: &str) -> PathBuf {
    let out = bin().args(["generate", family, param]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path = tmp(file);
    std::fs::write(&path, &out.stdout).unwrap();
    path
}

#[test]
fn bracket_renders_the_monoid_algebra_commutator() {
    let path = generate("algebra", "free2", "free2.json");
    let out = bin().args(["bracket"]).arg(&path).args(["s", "t"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "-1·st + 1·ts");

    // bracket of an element with itself vanishes under trivial whiskering
    let out = bin().args(["bracket"]).arg(&path).args(["s", "s"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0");
}

#[test]
fn bracket_accepts_indices_and_rejects_unknown_names() {
    let path = generate("algebra", "free2", "free2-idx.json");
    let by_name = bin().args(["bracket"]).arg(&path).args(["s", "t"]).output().unwrap();
    let by_index = bin().args(["bracket"]).arg(&path).args(["m1", "m2"]).output().unwrap();
    assert_eq!(by_name.stdout, by_index.stdout);

    let out = bin().args(["bracket"]).arg(&path).args(["sss", "t"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown morphism identifier"));
}

#[test]
fn commutator_table_on_the_s3_bundle_is_the_classical_one() {
    let path = generate("bundle", "s3_trivial", "s3.json");
    let out = bin().args(["commutators"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    // 36 rows, named by cycle notation
    assert_eq!(text.lines().count(), 36);
    assert!(text.contains("[(12),(13)] ="));
    // commutators of S3 land in the 3-cycle subgroup
    for line in text.lines() {
        let value = line.split(" = ").nth(1).unwrap();
        assert!(["e", "(123)", "(132)"].contains(&value), "{line}");
    }
    // two runs agree byte for byte
    let again = bin().args(["commutators"]).arg(&path).output().unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn commutators_need_a_groupoid_base() {
    let path = generate("algebra", "free2", "free2-comm.json");
    let out = bin().args(["commutators"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("groupoid"));
}

#[test]
fn check_json_format_is_parseable_and_stable() {
    let path = generate("bundle", "z3_trivial", "z3.json");
    let out = bin()
        .args(["check"])
        .arg(&path)
        .args(["--suite", "squares", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["format"], "whiskered.report/1");
    assert_eq!(v["convention"]["resolved_ordering"], "reversed");
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["law"] == "cube-delta-rule"));
}

#[test]
fn check_suites_select_their_entries() {
    let path = generate("bundle", "z4_twist", "z4t.json");
    for (suite, law) in [
        ("squares", "delta-comp-1"),
        ("whisker", "star-bimorphism-1"),
        ("commutators", "commutativity-criterion"),
        ("linear", "leibniz-defect"),
    ] {
        let out = bin()
            .args(["check"])
            .arg(&path)
            .args(["--suite", suite])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "suite {suite}");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains(law), "suite {suite} missing {law}:\n{text}");
        assert!(text.trim_end().ends_with("result: pass"));
    }
}

#[test]
fn generate_product_family() {
    let out = bin()
        .args(["generate", "product", "codiscrete:z2", "bundle:z3_trivial"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let path = tmp("product.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let ok = bin().args(["validate"]).arg(&path).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn unknown_parameter_lists_available_ones() {
    let out = bin().args(["generate", "bundle", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("s3_trivial"), "{err}");
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = bin().args(["validate", "/nonexistent/structure.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
