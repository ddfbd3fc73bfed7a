//! Compliance engine for a prescriptive passive-cooling standard for
//! tropical dwellings, plus a single-zone cross-ventilation estimator.
//!
//! The crate is organized as a pipeline:
//!
//! * [`model`] holds the building description types and their invariants.
//! * [`ingest`] reads and writes the JSON document format (strict parsing,
//!   canonical serialization).
//! * [`tables`] carries the prescriptive lookup tables and the conductivity
//!   scaling rule.
//! * [`rules`] evaluates the eight-rule catalog and produces findings.
//! * [`ventsim`] estimates cross-ventilation air change rates from a wind
//!   pressure balance.
//! * [`report`] assembles findings into a verdict with text and JSON
//!   renderings.
//! * [`cli`] wires everything into the `ecodom` binary.

pub mod cli;
pub mod ingest;
pub mod model;
pub mod report;
pub mod rules;
pub mod tables;
#[doc(hidden)]
pub mod testkit;
pub mod ventsim;

pub use ingest::{parse_building, serialize_building, ParseError, SCHEMA_VERSION};
pub use model::{validate_model, BuildingModel, ValidationError};
pub use report::{
    build_report, building_digest, parse_report, render_json, render_text, ComplianceReport,
    Verdict,
};
pub use rules::{
    check_all, check_rules, compute_permeability, Finding, Permeability, RuleId, Severity,
};
pub use ventsim::{estimate, solve_internal_pressure, VentResult, VentScenario};
