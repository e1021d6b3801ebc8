//! End-to-end tests driving the `lrc` binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn lrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn write_code_json(dir: &Path, name: &str, args: &[&str]) -> std::path::PathBuf {
    let output = lrc(args);
    assert!(output.status.success());
    let path = dir.join(name);
    let mut file = std::fs::File::create(&path).unwrap();
    file.write_all(&output.stdout).unwrap();
    path
}

#[test]
fn construct_platonic_tetrahedron() {
    let json = stdout_json(&lrc(&["construct", "platonic", "tetrahedron"]));
    assert_eq!(json["n"], 6);
    assert_eq!(json["k"], 3);
    assert_eq!(json["generator"].as_array().unwrap().len(), 3);
    assert_eq!(json["parity"].as_array().unwrap().len(), 3);
}

#[test]
fn construct_simplex_with_enumerator() {
    let json = stdout_json(&lrc(&["construct", "simplex", "3", "--with-enumerator"]));
    assert_eq!(json["n"], 7);
    assert_eq!(json["k"], 3);
    assert_eq!(json["weight_enumerator"]["polynomial"], "1 + 7z^4");
}

#[test]
fn construct_complete_4_is_the_tetrahedron_code() {
    let json = stdout_json(&lrc(&["construct", "complete", "4"]));
    assert_eq!(json["n"], 6);
    assert_eq!(json["k"], 3);
}

#[test]
fn construct_from_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triangle.txt");
    std::fs::write(&path, "1 2\n2 3\n1 3\n").unwrap();
    let json = stdout_json(&lrc(&["construct", "graph", path.to_str().unwrap()]));
    assert_eq!(json["n"], 3);
    assert_eq!(json["k"], 1);
}

#[test]
fn construct_fano_equals_simplex_code() {
    let fano = stdout_json(&lrc(&["construct", "fano"]));
    let simplex = stdout_json(&lrc(&["construct", "simplex", "3"]));
    // Both bases are reduced row echelon forms, so equality is textual.
    assert_eq!(fano["generator"], simplex["generator"]);
}

#[test]
fn construct_rejects_unknown_solid() {
    let output = lrc(&["construct", "platonic", "pyramid"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn analyze_octahedron_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_code_json(
        dir.path(),
        "octa.json",
        &["construct", "platonic", "octahedron"],
    );
    let path = path.to_str().unwrap();

    let ok = lrc(&["analyze", path, "--r", "3", "--t", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(json["all_available"], true);

    let fail = lrc(&["analyze", path, "--r", "2", "--t", "2"]);
    assert_eq!(fail.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&fail.stdout).unwrap();
    assert_eq!(json["all_available"], false);
}

#[test]
fn analyze_profile_simplex() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_code_json(dir.path(), "simplex.json", &["construct", "simplex", "3"]);
    let json = stdout_json(&lrc(&[
        "analyze",
        path.to_str().unwrap(),
        "--profile",
        "--r",
        "2",
    ]));
    let profile = json["profile"].as_array().unwrap();
    assert_eq!(profile.len(), 7);
    assert!(profile.iter().all(|row| row["max_t"] == 3));
}

#[test]
fn analyze_bad_file_is_usage_error() {
    let output = lrc(&["analyze", "/nonexistent.json", "--r", "2", "--t", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn construct_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (family, args, r, t) in [
        (
            "dodecahedron",
            vec!["construct", "platonic", "dodecahedron"],
            "2",
            "2",
        ),
        ("hamming", vec!["construct", "hamming", "3"], "6", "1"),
    ] {
        let path = write_code_json(dir.path(), &format!("{family}.json"), &args);
        let output = lrc(&["analyze", path.to_str().unwrap(), "--r", r, "--t", t]);
        assert_eq!(output.status.code(), Some(0), "{family}");
    }
}

#[test]
fn bounds_crossing_and_table() {
    let output = lrc(&[
        "bounds",
        "--crossing",
        "thm3_entropy",
        "tbf1",
        "--sweep",
        "t",
        "--fix",
        "r=2",
        "--range",
        "2:100",
    ]);
    assert!(output.status.success());
    assert_eq!(String::from_utf8_lossy(&output.stdout).trim(), "74");

    let output = lrc(&[
        "bounds", "--names", "thm1", "--sweep", "r", "--range", "2:2",
    ]);
    assert!(output.status.success());
    assert_eq!(
        String::from_utf8_lossy(&output.stdout),
        "param,thm1\n2,0.5\n"
    );

    let output = lrc(&[
        "bounds",
        "--names",
        "thm3_entropy,tbf1,tbf2,bk1",
        "--sweep",
        "t",
        "--fix",
        "r=2",
        "--range",
        "2:100",
    ]);
    assert!(output.status.success());
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert_eq!(stdout.lines().count(), 100); // header + 99 rows
    assert!(stdout.starts_with("param,thm3_entropy,tbf1,tbf2,bk1\n"));
}

#[test]
fn bounds_usage_errors() {
    let output = lrc(&[
        "bounds", "--names", "nosuch", "--sweep", "t", "--range", "2:3",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let output = lrc(&[
        "bounds", "--names", "tbf1", "--sweep", "t", "--range", "2-3",
    ]);
    assert_eq!(output.status.code(), Some(2));
    // tbf1 needs r; sweeping t without fixing r is a missing parameter.
    let output = lrc(&[
        "bounds", "--names", "tbf1", "--sweep", "t", "--range", "2:3",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn search_expectations() {
    let output = lrc(&[
        "search",
        "6",
        "2",
        "2",
        "--expect-rate",
        "1/2",
        "--expect",
        "complete:4",
    ]);
    assert_eq!(output.status.code(), Some(0));

    let output = lrc(&[
        "search",
        "7",
        "2",
        "3",
        "--expect-rate",
        "3/7",
        "--expect",
        "fano",
    ]);
    assert_eq!(output.status.code(), Some(0));

    // Wrong expectation: computation succeeds but the assertion fails.
    let output = lrc(&["search", "6", "2", "2", "--expect-rate", "2/3"]);
    assert_eq!(output.status.code(), Some(1));

    // Beyond the guard.
    let output = lrc(&["search", "15", "2", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn search_without_expectations_reports_only() {
    let output = lrc(&["search", "9", "2", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(json["exhausted"], true);
    assert_eq!(json["max_dual_rate"], "2/9");
}

#[test]
fn table1_reports_the_swapped_rows() {
    let json = stdout_json(&lrc(&["table1"]));
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let find = |solid: &str| {
        rows.iter()
            .find(|r| r["solid"] == solid)
            .unwrap_or_else(|| panic!("{solid} row"))
    };
    assert_eq!(find("tetrahedron")["matches_printed_row"][0], "tetrahedron");
    assert_eq!(
        find("dodecahedron")["matches_printed_row"][0],
        "icosahedron"
    );
    assert_eq!(
        find("icosahedron")["matches_printed_row"][0],
        "dodecahedron"
    );
    assert!(rows.iter().all(|r| r["availability"]["verified"] == true));
}

#[test]
fn guard_override_raises_search_limit() {
    let blocked = lrc(&["search", "12", "2", "2"]);
    assert_eq!(blocked.status.code(), Some(2));
    let output = Command::new(env!("CARGO_BIN_EXE_lrc"))
        .args(["search", "12", "2", "2"])
        .env("LRC_GUARD_OVERRIDE", "search-n=12")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(json["exhausted"], true);
}

#[test]
fn jobs_flag_and_json_table() {
    let output = lrc(&["--jobs", "1", "search", "6", "2", "2"]);
    assert_eq!(output.status.code(), Some(0));

    let output = lrc(&[
        "bounds",
        "--json",
        "--names",
        "tbf1,thm1",
        "--sweep",
        "t",
        "--fix",
        "r=2",
        "--range",
        "2:4",
    ]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(json["variable"], "t");
    assert_eq!(json["rows"].as_array().unwrap().len(), 3);
    // Exact bounds print as rationals in JSON.
    assert_eq!(json["rows"][0]["values"][0], "8/15");
    assert_eq!(json["rows"][0]["values"][1], "1/2");
}

#[test]
fn verify_single_criterion() {
    let output = lrc(&["verify", "--criterion", "1"]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("PASS criterion  1"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["construct", "platonic", "icosahedron"],
        vec!["table1"],
        vec!["search", "6", "2", "2"],
        vec![
            "bounds",
            "--names",
            "tbf1,thm3_entropy",
            "--sweep",
            "t",
            "--fix",
            "r=2",
            "--range",
            "2:40",
        ],
    ] {
        let a = lrc(&args);
        let b = lrc(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
