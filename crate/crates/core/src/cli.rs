//! Command-line interface.
//!
//! Exit codes: 0 when the run succeeds (and, for `check`, the building is
//! compliant), 1 when `check` finds violations, 2 on usage, parse, or
//! validation errors. Reports go to stdout; diagnostics go to stderr.

use crate::ingest::{parse_building, SCHEMA_VERSION};
use crate::model::validate_model;
use crate::report::{build_report, render_json, render_text_styled, Verdict};
use crate::rules::RuleId;
use crate::tables;
use crate::ventsim::{self, VentScenario};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::{IsTerminal, Read};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "ecodom",
    version,
    about = "Passive-cooling compliance checker and cross-ventilation estimator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a building description against the prescriptive catalog.
    Check(CheckArgs),
    /// Print the prescriptive lookup tables.
    Tables(TablesArgs),
    /// Estimate cross-ventilation for a single-zone scenario.
    Vent(VentArgs),
    /// Describe the input document format and print a working example.
    Schema,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// Building description file; `-` reads stdin.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Comma-separated subset of rules to run (e.g. R-ROOF,R-VENT).
    #[arg(long, value_delimiter = ',', value_parser = parse_rule)]
    rules: Vec<RuleId>,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct VentArgs {
    /// Free wind speed, m/s.
    #[arg(long, default_value_t = 4.0)]
    wind: f64,
    /// Openable area on the windward facade, m².
    #[arg(long, default_value_t = 2.0)]
    area_wind: f64,
    /// Openable area on the leeward facade, m².
    #[arg(long, default_value_t = 2.0)]
    area_lee: f64,
    /// Ventilated volume, m³.
    #[arg(long, default_value_t = 175.0)]
    volume: f64,
    /// Indoor cross-section the draught passes through, m².
    #[arg(long, default_value_t = 17.5)]
    cross_section: f64,
    /// Orifice discharge coefficient.
    #[arg(long, default_value_t = 0.61)]
    cd: f64,
    /// Pressure coefficient, windward facade.
    #[arg(long, default_value_t = 0.6, allow_hyphen_values = true)]
    cp_wind: f64,
    /// Pressure coefficient, leeward facade.
    #[arg(long, default_value_t = -0.3, allow_hyphen_values = true)]
    cp_lee: f64,
    /// Air density, kg/m³.
    #[arg(long, default_value_t = 1.2)]
    rho: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

fn parse_rule(s: &str) -> Result<RuleId, String> {
    s.parse()
}

/// Run the CLI with explicit arguments, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders help/version through the same error path.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Check(args) => run_check(args),
        Command::Tables(args) => run_tables(args),
        Command::Vent(args) => run_vent(args),
        Command::Schema => run_schema(),
    }
}

fn color_enabled() -> bool {
    std::io::stdout().is_terminal()
        && std::env::var_os("ECODOM_NO_COLOR").is_none()
        && std::env::var_os("NO_COLOR").is_none()
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
    }
}

fn run_check(args: CheckArgs) -> i32 {
    let source = match read_input(&args.input) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let building = match parse_building(&source) {
        Ok(b) => b,
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    let errors = validate_model(&building);
    if !errors.is_empty() {
        eprintln!("error: the building description is invalid:");
        for e in &errors {
            eprintln!("  {e}");
        }
        return 2;
    }

    let rules: Vec<RuleId> = if args.rules.is_empty() {
        RuleId::ALL.to_vec()
    } else {
        args.rules
    };
    let report = build_report(&building, &rules);
    match args.format {
        OutputFormat::Json => println!("{}", render_json(&report)),
        OutputFormat::Text => print!("{}", render_text_styled(&report, color_enabled())),
    }
    match report.verdict {
        Verdict::Compliant => 0,
        Verdict::NonCompliant => 1,
    }
}

fn format_cell(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v}"),
        None => "n/a".to_string(),
    }
}

fn run_tables(args: TablesArgs) -> i32 {
    let dump = tables::dump();
    match args.format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&dump).expect("table dump serializes")
            );
        }
        OutputFormat::Text => {
            println!("roof insulation minimums (cm)");
            println!(
                "  {:<16} {:<7} {:>12} {:>12}",
                "kind", "color", "lambda 0.041", "lambda 0.029"
            );
            for row in &dump.roof {
                println!(
                    "  {:<16} {:<7} {:>12} {:>12}",
                    row.kind,
                    row.color,
                    format_cell(row.min_cm_at_0_041),
                    format_cell(row.min_cm_at_0_029)
                );
            }
            println!("\nwall protection minimums (canopy d/h, or insulation cm at lambda 0.041)");
            println!(
                "  {:<22} {:<7} {:<6} {:>10} {:>14}",
                "material", "color", "facing", "canopy d/h", "insulation cm"
            );
            for row in &dump.walls {
                println!(
                    "  {:<22} {:<7} {:<6} {:>10} {:>14}",
                    row.material,
                    row.color,
                    row.orientation,
                    format_cell(row.canopy_min_d_over_h),
                    format_cell(row.insulation_min_cm_at_0_041)
                );
            }
            println!("\nwindow canopy minimums (d / (2a + h))");
            for row in &dump.windows {
                println!("  {:<6} {}", row.orientation, row.min_ratio);
            }
            println!("\nhot water sizing");
            println!(
                "  {:<7} {:>16} {:>16} {:>21}",
                "type", "solar min m2", "electric min L", "max cooling constant"
            );
            for row in &dump.water_heaters {
                println!(
                    "  {:<7} {:>16} {:>16} {:>21}",
                    row.f_type,
                    row.solar_collector_min_m2,
                    row.electric_storage_min_l,
                    row.electric_cooling_constant_max
                );
            }
            println!("\nn/a: no prescription exists for that configuration");
            println!(
                "other conductivities scale the lambda-0.041 cell at equal thermal \
                 resistance, rounded up to 0.1 cm"
            );
        }
    }
    0
}

fn run_vent(args: VentArgs) -> i32 {
    let scenario = VentScenario {
        wind_speed_ms: args.wind,
        area_windward_m2: args.area_wind,
        area_leeward_m2: args.area_lee,
        volume_m3: args.volume,
        cross_section_m2: args.cross_section,
        discharge_coefficient: args.cd,
        cp_windward: args.cp_wind,
        cp_leeward: args.cp_lee,
        air_density_kg_m3: args.rho,
    };
    if let Err(msg) = scenario.validate() {
        eprintln!("error: {msg}");
        return 2;
    }
    let result = ventsim::estimate(&scenario);
    match args.format {
        OutputFormat::Json => {
            let payload = serde_json::json!({
                "scenario": scenario,
                "result": result,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("vent result serializes")
            );
        }
        OutputFormat::Text => {
            println!(
                "assumptions: wind {:.2} m/s, windward {:.2} m2, leeward {:.2} m2, volume \
                 {:.1} m3, cross-section {:.2} m2, Cd {:.2}, Cp {:+.2}/{:+.2}, rho {:.3} kg/m3",
                scenario.wind_speed_ms,
                scenario.area_windward_m2,
                scenario.area_leeward_m2,
                scenario.volume_m3,
                scenario.cross_section_m2,
                scenario.discharge_coefficient,
                scenario.cp_windward,
                scenario.cp_leeward,
                scenario.air_density_kg_m3
            );
            println!(
                "facade pressures: windward {:.4} Pa, leeward {:.4} Pa (dynamic {:.4} Pa)",
                result.pressure_windward_pa, result.pressure_leeward_pa, result.dynamic_pressure_pa
            );
            println!(
                "internal pressure: {:.4} Pa (balance residual {:.3e} m3/s)",
                result.internal_pressure_pa, result.residual_m3s
            );
            println!("flow: {:.4} m3/s", result.flow_m3s);
            println!(
                "air change rate: {:.2} 1/h (target {}: {})",
                result.ach_per_h,
                ventsim::ACH_TARGET,
                if result.meets_ach_target {
                    "met"
                } else {
                    "not met"
                }
            );
            let band = ventsim::SPEED_BAND_MS;
            let position = if result.in_speed_band {
                "within"
            } else if result.indoor_speed_ms < band.0 {
                "below"
            } else {
                "above"
            };
            println!(
                "indoor air speed: {:.3} m/s (comfort band {}-{} m/s: {position})",
                result.indoor_speed_ms, band.0, band.1
            );
        }
    }
    0
}

fn run_schema() -> i32 {
    let example = crate::testkit::compliant_building();
    let example_value: serde_json::Value =
        serde_json::from_str(&crate::ingest::serialize_building(&example))
            .expect("canonical output is valid JSON");
    let schema = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "top_level": {
            "schema_version": "integer, must equal 1",
            "site": {
                "hemisphere": "\"southern\" or \"northern\"",
                "protected_perimeter_fraction": "number in [0, 1]",
                "protected_width_m": "number >= 0",
            },
            "dwellings": "array of dwelling objects",
        },
        "dwelling": {
            "id": "string, unique per document",
            "f_type": "one of F1..F5, F6plus",
            "rooms": "array of {name, kind: principal|service, floor_area_m2, volume_m3, has_fan_ceiling_wiring, has_fan_wall_switch}",
            "facades": "array of {id, orientation_deg in [0,360) clockwise from north, opposite_facade_id?}; opposite references must be mutual",
            "walls": "array of {facade_id, material: concrete_20cm|hollow_concrete_blocks|wood, color, canopy? {d_m, h_m}, insulation? {lambda_w_mk, thickness_cm}, vertical_shading_with_airgap?}",
            "roof": "{kind: simple|ventilated_loft, color, insulation?, loft_vent? {openings_area_m2, roof_area_m2}}",
            "openings": "array of {id, room, placement: {external: {facade_id}} | \"internal\", net_area_m2, height_m, shading? {d_m, a_m}, other_shading_device?}",
            "water_heater": "{kind: solar|electric_storage|electric_instant|gas, solar?, electric?, gas?}; the payload must match kind",
            "ac_units": "array of {room, kind: window_unit|split_system, cooling_efficiency, cooling_power_w, room_sealed, mech_air_renewal_m3h, maintenance_contract}",
        },
        "color": "\"light\", \"medium\", \"dark\", or a solar absorptivity number in [0, 1] (<= 0.5 light, <= 0.7 medium, else dark)",
        "notes": [
            "unknown fields anywhere are rejected",
            "all floats are written back with four decimals; the report digest is computed over that canonical form",
            "orientation tables are keyed after snapping orientation_deg to the nearest cardinal and mirroring north/south on northern-hemisphere sites",
        ],
        "example": example_value,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&schema).expect("schema serializes")
    );
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules_argument_accepts_codes_and_names() {
        let cli = Cli::try_parse_from(["ecodom", "check", "in.json", "--rules", "R-ROOF,vent"])
            .expect("parse");
        match cli.command {
            Command::Check(args) => assert_eq!(args.rules, vec![RuleId::Roof, RuleId::Vent]),
            _ => panic!("expected check"),
        }
    }

    #[test]
    fn unknown_rule_is_a_usage_error() {
        assert!(Cli::try_parse_from(["ecodom", "check", "in.json", "--rules", "R-NOPE"]).is_err());
    }

    #[test]
    fn vent_accepts_negative_pressure_coefficients() {
        let cli = Cli::try_parse_from(["ecodom", "vent", "--cp-lee", "-0.5"]).expect("parse");
        match cli.command {
            Command::Vent(args) => assert_eq!(args.cp_lee, -0.5),
            _ => panic!("expected vent"),
        }
    }
}
