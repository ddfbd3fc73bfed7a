//! End-to-end tests of the `ecodom` binary: exit codes, output formats,
//! and error routing.

mod common;

use common::{fixture_path, fixture_text, run_cli, stderr_str, stdout_str};
use ecodom_core::report::{parse_report, Verdict};
use ecodom_core::rules::RuleId;
use std::io::Write;

#[test]
fn non_compliant_input_exits_one_with_text_report() {
    let path = fixture_path("ladecouverte_initial.json");
    let out = run_cli(&["check", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_str(&out);
    assert!(
        text.starts_with("NON-COMPLIANT (2 findings)"),
        "got: {text}"
    );
    assert!(
        !text.contains('\x1b'),
        "no ANSI codes when stdout is not a tty"
    );
    assert!(stderr_str(&out).is_empty());
}

#[test]
fn compliant_input_exits_zero() {
    let path = fixture_path("ladecouverte_modified.json");
    let out = run_cli(&["check", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).starts_with("COMPLIANT (0 findings)"));
}

#[test]
fn json_format_emits_a_parseable_report() {
    let path = fixture_path("ladecouverte_initial.json");
    let out = run_cli(&["check", "--format", "json", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let report = parse_report(stdout_str(&out).trim()).expect("report JSON parses");
    assert_eq!(report.verdict, Verdict::NonCompliant);
    assert_eq!(report.findings.len(), 2);
    let building = ecodom_core::parse_building(&fixture_text("ladecouverte_initial.json")).unwrap();
    assert_eq!(report.digest, ecodom_core::building_digest(&building));
}

#[test]
fn stdin_dash_reads_the_document_from_stdin() {
    let source = fixture_text("ladecouverte_modified.json");
    let out = run_cli(&["check", "-"], Some(&source));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn rules_filter_limits_the_catalog() {
    let path = fixture_path("ladecouverte_initial.json");
    let out = run_cli(
        &[
            "check",
            "--format",
            "json",
            "--rules",
            "R-VENT",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let report = parse_report(stdout_str(&out).trim()).unwrap();
    assert_eq!(report.findings.len(), 1);
    assert_eq!(report.findings[0].rule, RuleId::Vent);

    // Filtered to a rule the fixture passes, the verdict flips to compliant.
    let out = run_cli(
        &["check", "--rules", "R-DHW,R-FAN", path.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = run_cli(&["check", "/nonexistent/building.json"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("cannot read"));
    assert!(stdout_str(&out).is_empty());
}

#[test]
fn malformed_json_exits_two_with_location() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"{\"schema_version\": 1,").unwrap();
    let out = run_cli(&["check", file.path().to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_str(&out).contains("line"),
        "stderr: {}",
        stderr_str(&out)
    );
}

#[test]
fn invalid_model_exits_two_listing_paths() {
    let source = fixture_text("ladecouverte_initial.json")
        .replace("\"floor_area_m2\": 8.0", "\"floor_area_m2\": -8.0");
    let out = run_cli(&["check", "-"], Some(&source));
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_str(&out);
    assert!(err.contains("floor_area_m2"), "stderr: {err}");
}

#[test]
fn unknown_field_exits_two_with_its_path() {
    let source = fixture_text("ladecouverte_initial.json").replace(
        "\"has_fan_wall_switch\": true",
        "\"has_fan_wall_switch\": true, \"mystery\": 3",
    );
    let out = run_cli(&["check", "-"], Some(&source));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("mystery"));
}

#[test]
fn wrong_schema_version_exits_two() {
    let source = fixture_text("ladecouverte_initial.json")
        .replace("\"schema_version\": 1", "\"schema_version\": 2");
    let out = run_cli(&["check", "-"], Some(&source));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("schema_version 2"));
}

#[test]
fn usage_errors_exit_two_and_help_exits_zero() {
    let out = run_cli(&["check"], None);
    assert_eq!(out.status.code(), Some(2), "missing argument");
    let out = run_cli(&["frobnicate"], None);
    assert_eq!(out.status.code(), Some(2), "unknown subcommand");
    let out = run_cli(&["--help"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("ecodom"));
    let out = run_cli(&["check", "x.json", "--rules", "R-NOPE"], None);
    assert_eq!(out.status.code(), Some(2), "unknown rule name");
}

#[test]
fn vent_defaults_reproduce_the_reference_scenario() {
    let out = run_cli(&["vent"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("internal pressure: 1.4400 Pa"), "got: {text}");
    assert!(text.contains("flow: 3.2736 m3/s"));
    assert!(text.contains("air change rate: 67.34 1/h (target 40: met)"));
    assert!(text.contains("indoor air speed: 0.187 m/s"));
    assert!(text.contains("below"));
}

#[test]
fn vent_json_carries_scenario_and_result() {
    let out = run_cli(&["vent", "--wind", "2", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["scenario"]["wind_speed_ms"], 2.0);
    assert!(value["result"]["ach_per_h"].as_f64().unwrap() > 0.0);
    assert!(value["result"]["residual_m3s"].as_f64().unwrap().abs() < 1e-9);
}

#[test]
fn vent_rejects_invalid_scenarios() {
    let out = run_cli(&["vent", "--area-wind", "0"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("area_windward_m2"));
}

#[test]
fn tables_text_and_json_agree_on_the_cells() {
    let out = run_cli(&["tables"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("simple"));
    assert!(text.contains("n/a"));

    let out = run_cli(&["tables", "--format", "json"], None);
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["roof"].as_array().unwrap().len(), 6);
    assert_eq!(value["walls"].as_array().unwrap().len(), 36);
    assert_eq!(value["windows"].as_array().unwrap().len(), 4);
    assert_eq!(value["water_heaters"].as_array().unwrap().len(), 6);
}

#[test]
fn schema_example_passes_check() {
    let out = run_cli(&["schema"], None);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let example = serde_json::to_string(&value["example"]).unwrap();
    let out = run_cli(&["check", "-"], Some(&example));
    assert_eq!(
        out.status.code(),
        Some(0),
        "the shipped example must be compliant"
    );
}
