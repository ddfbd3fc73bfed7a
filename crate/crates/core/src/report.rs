//! Report assembly and the two output renderings.
//!
//! A report is a value: findings, per-dwelling summaries, the verdict, and
//! a digest of the canonical form of the input it was computed from. All
//! floats are quantized to four decimals when the report is built, so the
//! JSON rendering round-trips bit-exactly and equal inputs yield
//! byte-identical output.

use crate::ingest::{self, ParseError, SCHEMA_VERSION};
use crate::model::BuildingModel;
use crate::rules::{self, DwellingSummary, Finding, RuleId, Severity};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Compliant,
    NonCompliant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplianceReport {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub verdict: Verdict,
    /// `sha256:<hex>` over the canonical serialization of the input.
    pub digest: String,
    pub findings: Vec<Finding>,
    pub summaries: Vec<DwellingSummary>,
}

/// Quantize to four decimals; the resolution every reported float carries.
fn q4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4
}

fn quantize_finding(mut finding: Finding) -> Finding {
    for quantity in [&mut finding.measured, &mut finding.required]
        .into_iter()
        .flatten()
    {
        quantity.value = q4(quantity.value);
    }
    finding
}

fn quantize_summary(mut summary: DwellingSummary) -> DwellingSummary {
    if let Some(p) = &mut summary.permeability {
        for v in [
            &mut p.sp1_m2,
            &mut p.sp2_m2,
            &mut p.sp_m2,
            &mut p.so1_m2,
            &mut p.so2_m2,
            &mut p.si1_m2,
            &mut p.si2_m2,
            &mut p.p1,
            &mut p.p2,
        ] {
            *v = q4(*v);
        }
    }
    summary
}

/// Digest of the canonical serialization of a building, `sha256:<hex>`.
pub fn building_digest(building: &BuildingModel) -> String {
    let canonical = ingest::serialize_building(building);
    let hash = Sha256::digest(canonical.as_bytes());
    format!("sha256:{}", hex::encode(hash))
}

/// Run the given rules over the building and assemble the report.
pub fn build_report(building: &BuildingModel, rule_filter: &[RuleId]) -> ComplianceReport {
    let findings: Vec<Finding> = rules::check_rules(building, rule_filter)
        .into_iter()
        .map(quantize_finding)
        .collect();
    let verdict = if findings.iter().any(|f| f.severity == Severity::Fail) {
        Verdict::NonCompliant
    } else {
        Verdict::Compliant
    };
    ComplianceReport {
        schema_version: SCHEMA_VERSION,
        tool: ToolInfo {
            name: "ecodom".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        verdict,
        digest: building_digest(building),
        findings,
        summaries: rules::dwelling_summaries(building)
            .into_iter()
            .map(quantize_summary)
            .collect(),
    }
}

/// Canonical JSON rendering: compact, fixed field order, four-decimal floats.
pub fn render_json(report: &ComplianceReport) -> String {
    ingest::canonical_json(report)
}

/// Parse a report back from its JSON rendering. Strict, like the building
/// parser: unknown fields and version mismatches are errors.
pub fn parse_report(source: &str) -> Result<ComplianceReport, ParseError> {
    let mut deserializer = serde_json::Deserializer::from_str(source);
    let report: ComplianceReport =
        serde_path_to_error::deserialize(&mut deserializer).map_err(|err| {
            let path = err.path().to_string();
            let inner = err.into_inner();
            let (line, column) = (inner.line(), inner.column());
            if inner.classify() == serde_json::error::Category::Data {
                ParseError::Data {
                    path,
                    line,
                    column,
                    message: inner.to_string(),
                }
            } else {
                ParseError::Syntax {
                    line,
                    column,
                    message: inner.to_string(),
                }
            }
        })?;
    if report.schema_version != SCHEMA_VERSION {
        return Err(ParseError::UnsupportedSchema {
            found: report.schema_version,
        });
    }
    Ok(report)
}

mod style {
    pub const RESET: &str = "\x1b[0m";
    pub const BOLD: &str = "\x1b[1m";
    pub const RED: &str = "\x1b[31m";
    pub const GREEN: &str = "\x1b[32m";
}

/// Human-readable rendering, optionally with ANSI colors.
pub fn render_text_styled(report: &ComplianceReport, color: bool) -> String {
    let paint = |code: &str, s: &str| {
        if color {
            format!("{code}{s}{}", style::RESET)
        } else {
            s.to_string()
        }
    };

    let mut out = String::new();
    let n = report.findings.len();
    let noun = if n == 1 { "finding" } else { "findings" };
    let verdict = match report.verdict {
        Verdict::Compliant => paint(style::GREEN, "COMPLIANT"),
        Verdict::NonCompliant => paint(style::RED, "NON-COMPLIANT"),
    };
    out.push_str(&format!("{verdict} ({n} {noun})\n"));
    out.push_str(&format!("input digest: {}\n", report.digest));
    out.push_str(&format!(
        "tool: {} {}\n",
        report.tool.name, report.tool.version
    ));

    for finding in &report.findings {
        out.push('\n');
        let severity = match finding.severity {
            Severity::Fail => paint(style::RED, "FAIL"),
            Severity::Warn => "WARN".to_string(),
            Severity::Info => "INFO".to_string(),
        };
        let scope = if finding.dwelling_id.is_empty() {
            "building".to_string()
        } else {
            format!("dwelling {}", finding.dwelling_id)
        };
        out.push_str(&format!(
            "{} {severity} {scope} at {}\n",
            paint(style::BOLD, finding.rule.code()),
            finding.entity_path
        ));
        out.push_str(&format!("  {}\n", finding.message));
        if let (Some(measured), Some(required), Some(comparator)) =
            (&finding.measured, &finding.required, finding.comparator)
        {
            out.push_str(&format!(
                "  measured {:.4} {} {} required {:.4} {}\n",
                measured.value,
                measured.unit,
                comparator.violated_symbol(),
                required.value,
                required.unit
            ));
        }
        if let Some(remediation) = &finding.remediation {
            out.push_str(&format!("  fix: {remediation}\n"));
        }
    }

    if !report.summaries.is_empty() {
        out.push('\n');
        for summary in &report.summaries {
            match &summary.permeability {
                Some(p) => out.push_str(&format!(
                    "dwelling {}: permeability {} {:.4} / {} {:.4} (openable {:.2} m2 and \
                     {:.2} m2 against a mean principal floor area of {:.2} m2)\n",
                    summary.dwelling_id,
                    p.facade_1,
                    p.p1,
                    p.facade_2,
                    p.p2,
                    p.so1_m2,
                    p.so2_m2,
                    p.sp_m2
                )),
                None => out.push_str(&format!(
                    "dwelling {}: no evaluable pair of opposite facades\n",
                    summary.dwelling_id
                )),
            }
        }
    }
    out
}

/// Plain-text rendering without styling.
pub fn render_text(report: &ComplianceReport) -> String {
    render_text_styled(report, false)
}
