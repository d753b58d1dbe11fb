//! Golden tests for the command line: fixed scenarios must produce
//! byte-identical CSV and SVG output across runs, with the documented exit
//! codes and file structure.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcplan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_plan(scenario: &Path, out: &Path, format: &str) -> Output {
    run(&[
        "plan",
        "--scenario",
        scenario.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--format",
        format,
    ])
}

#[test]
fn plan_csv_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = fixture("annulus.json");
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");

    assert!(run_plan(&scenario, &first, "csv").status.success());
    assert!(run_plan(&scenario, &second, "csv").status.success());

    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b, "CSV output must be deterministic");
}

#[test]
fn plan_csv_round_trips_start_goal_and_row_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("annulus.csv");
    assert!(run_plan(&fixture("annulus.json"), &out, "csv").status.success());

    let text = std::fs::read_to_string(&out).unwrap();
    let comments: Vec<&str> = text.lines().filter(|l| l.starts_with('#')).collect();
    assert!(comments[0].contains("annulus"));
    assert!(comments[1].contains("index 1 of 2"));

    let mut rows = text.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(rows.next().unwrap(), "t,x1,x2");
    let data: Vec<Vec<f64>> = rows
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(data.len(), 256);

    let first = &data[0];
    let last = &data[data.len() - 1];
    assert_eq!(first[0], 0.0);
    assert_eq!(last[0], 1.0);
    assert!((first[1] - 2.0).abs() <= 1e-9 && first[2].abs() <= 1e-9);
    assert!(last[1].abs() <= 1e-9 && (last[2] - 2.0).abs() <= 1e-9);
}

#[test]
fn plan_json_reports_dispatch_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rule2.json");
    assert!(run_plan(&fixture("annulus_rule2.json"), &out, "json")
        .status
        .success());

    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(value["rule_index"], 2);
    assert_eq!(value["rule_count"], 2);
    assert_eq!(value["rule_label"], "s2~");
    assert_eq!(value["samples"].as_array().unwrap().len(), 256);
}

#[test]
fn render_svg_is_byte_identical_with_expected_structure() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = fixture("annulus.json");
    let first = dir.path().join("a.svg");
    let second = dir.path().join("b.svg");

    for out in [&first, &second] {
        let output = run(&[
            "render",
            "--scenario",
            scenario.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(output.status.success());
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b, "SVG output must be deterministic");

    // Obstacle disk, clearance circle, deformation circle, start marker.
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.matches("<circle").count(), 4);
    assert_eq!(text.matches("<polyline").count(), 1);
}

#[test]
fn equal_endpoints_plan_as_a_constant_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("constant.csv");
    assert!(run_plan(&fixture("sphere_constant.json"), &out, "csv")
        .status
        .success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("index 1 of 2"));
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('t'))
        .collect();
    assert_eq!(rows.len(), 16);
    for row in rows {
        let mut cols = row.split(',');
        cols.next(); // t varies
        assert_eq!(cols.next(), Some("1"));
        assert_eq!(cols.next(), Some("0"));
    }
}

#[test]
fn sphere_and_star_scenarios_plan_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    for (name, rows) in [("sphere.json", 64), ("star_disk.json", 128)] {
        let out = dir.path().join(name).with_extension("csv");
        assert!(run_plan(&fixture(name), &out, "csv").status.success());
        let text = std::fs::read_to_string(&out).unwrap();
        let data = text
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with('t'))
            .count();
        assert_eq!(data, rows);
    }
}

#[test]
fn validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");

    let output = run_plan(&fixture("start_inside_obstacle.json"), &out, "csv");
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("outside the free space"), "{stderr}");

    // Ambient dimension 4 cannot be drawn.
    let output = run(&[
        "render",
        "--scenario",
        fixture("sphere_s3.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_passes_on_shipped_spaces_and_fails_on_fixtures() {
    let output = run(&[
        "verify",
        "--scenario",
        fixture("sphere.json").to_str().unwrap(),
        "--seed",
        "42",
        "--n",
        "500",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("[PASS] geodesic(S^1)"), "{stdout}");
    assert!(!stdout.contains("[FAIL]"), "{stdout}");

    let output = run(&["verify", "--fixture", "broken-rule", "--n", "300"]);
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("[FAIL] endpoints"), "{stdout}");
    assert!(stdout.contains("witness"), "{stdout}");
}

#[test]
fn verify_report_json_mirrors_the_line_output() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let output = run(&[
        "verify",
        "--scenario",
        fixture("annulus.json").to_str().unwrap(),
        "--n",
        "300",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));

    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(value["all_passed"], true);
    let checks = value["checks"].as_array().unwrap();
    assert!(checks.len() >= 8);
    for check in checks {
        assert!(check["passed"].as_bool().unwrap());
        assert!(check["max_violation"].as_f64().unwrap() <= check["tolerance"].as_f64().unwrap());
    }
}
