//! Reading and writing the building description file.
//!
//! The on-disk format is JSON with a top-level `schema_version`. Parsing is
//! strict: unknown fields, a missing or unsupported schema version, and any
//! type mismatch are hard errors carrying the JSON path and source location.
//!
//! Serialization is canonical: fixed field order and every float printed
//! with exactly four decimals, so equal models produce byte-identical
//! output and the report digest is stable across platforms.

use crate::model::{BuildingModel, Dwelling, Site};
use serde::{Deserialize, Serialize};
use std::io;
use thiserror::Error;

/// Version of the file format this build reads and writes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid value at `{path}` (line {line}, column {column}): {message}")]
    Data {
        /// JSON path of the offending value, e.g. `dwellings[0].rooms[1].kind`.
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema_version {found}: this build reads version {SCHEMA_VERSION}")]
    UnsupportedSchema { found: u32 },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentIn {
    schema_version: u32,
    site: Site,
    dwellings: Vec<Dwelling>,
}

#[derive(Serialize)]
struct DocumentOut<'a> {
    schema_version: u32,
    site: &'a Site,
    dwellings: &'a [Dwelling],
}

/// Parse a building description from JSON source.
pub fn parse_building(source: &str) -> Result<BuildingModel, ParseError> {
    let mut deserializer = serde_json::Deserializer::from_str(source);
    let doc: DocumentIn = match serde_path_to_error::deserialize(&mut deserializer) {
        Ok(doc) => doc,
        Err(err) => {
            let path = err.path().to_string();
            let inner = err.into_inner();
            let (line, column) = (inner.line(), inner.column());
            return Err(if inner.classify() == serde_json::error::Category::Data {
                ParseError::Data {
                    path,
                    line,
                    column,
                    message: strip_location_suffix(&inner.to_string()),
                }
            } else {
                ParseError::Syntax {
                    line,
                    column,
                    message: strip_location_suffix(&inner.to_string()),
                }
            });
        }
    };
    if doc.schema_version != SCHEMA_VERSION {
        return Err(ParseError::UnsupportedSchema {
            found: doc.schema_version,
        });
    }
    Ok(BuildingModel {
        site: doc.site,
        dwellings: doc.dwellings,
    })
}

/// serde_json appends " at line L column C" to its messages; we report the
/// location separately, so drop the suffix.
fn strip_location_suffix(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(idx) => message[..idx].to_string(),
        None => message.to_string(),
    }
}

/// JSON formatter that prints every float with exactly four decimals and no
/// whitespace. This is the canonical form all digests are computed over.
struct CanonicalFormatter;

impl serde_json::ser::Formatter for CanonicalFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        debug_assert!(value.is_finite(), "canonical form cannot hold {value}");
        write!(writer, "{value:.4}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.write_f64(writer, value as f64)
    }
}

fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, CanonicalFormatter);
    value
        .serialize(&mut ser)
        .expect("canonical serialization cannot fail on valid models");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Serialize a building description to its canonical JSON form.
pub fn serialize_building(building: &BuildingModel) -> String {
    to_canonical_json(&DocumentOut {
        schema_version: SCHEMA_VERSION,
        site: &building.site,
        dwellings: &building.dwellings,
    })
}

/// Canonical JSON for any serializable value (reports reuse the same float
/// convention as building descriptions).
pub(crate) fn canonical_json<T: Serialize>(value: &T) -> String {
    to_canonical_json(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SurfaceColor;
    use crate::testkit;

    #[test]
    fn serialize_then_parse_is_identity_on_the_fixture() {
        let model = testkit::compliant_building();
        let text = serialize_building(&model);
        let reparsed = parse_building(&text).expect("canonical output must parse");
        assert_eq!(serialize_building(&reparsed), text);
    }

    #[test]
    fn floats_are_printed_with_four_decimals() {
        let model = testkit::compliant_building();
        let text = serialize_building(&model);
        assert!(
            text.contains("\"protected_perimeter_fraction\":0.8000"),
            "canonical floats must carry 4 decimals: {text}"
        );
        assert!(!text.contains(": "), "canonical form is compact");
    }

    #[test]
    fn unknown_fields_are_rejected_with_their_path() {
        let model = testkit::compliant_building();
        let mut value: serde_json::Value =
            serde_json::from_str(&serialize_building(&model)).unwrap();
        value["dwellings"][0]["rooms"][0]["unknown_knob"] = 1.into();
        let err = parse_building(&value.to_string()).unwrap_err();
        match err {
            ParseError::Data { path, message, .. } => {
                assert!(path.starts_with("dwellings[0].rooms[0]"), "path: {path}");
                assert!(message.contains("unknown_knob"), "message: {message}");
            }
            other => panic!("expected a data error, got {other:?}"),
        }
    }

    #[test]
    fn schema_version_must_match() {
        let model = testkit::compliant_building();
        let text =
            serialize_building(&model).replace("\"schema_version\":1", "\"schema_version\":7");
        assert_eq!(
            parse_building(&text).unwrap_err(),
            ParseError::UnsupportedSchema { found: 7 }
        );
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let err = parse_building("{\n  \"schema_version\": 1,,\n}").unwrap_err();
        match err {
            ParseError::Syntax { line, column, .. } => {
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn color_accepts_raw_absorptivity_numbers() {
        let model = testkit::compliant_building();
        let text = serialize_building(&model).replacen("\"light\"", "0.45", 1);
        let parsed = parse_building(&text).expect("raw alpha must parse");
        let first_wall_color = parsed.dwellings[0].walls[0].color;
        assert_eq!(first_wall_color, SurfaceColor::Light);
    }

    #[test]
    fn color_rejects_unknown_names_helpfully() {
        let model = testkit::compliant_building();
        let text = serialize_building(&model).replacen("\"light\"", "\"purple\"", 1);
        let err = parse_building(&text).unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("purple"),
            "message should quote the input: {msg}"
        );
        assert!(msg.contains("light"), "message should list choices: {msg}");
    }

    #[test]
    fn missing_payload_mismatch_is_caught_by_validation_not_parse() {
        // Parsing is shape-only; the payload/kind match is a model invariant.
        let model = testkit::compliant_building();
        let text = serialize_building(&model).replace("electric_storage", "gas");
        let parsed = parse_building(&text).expect("shape still valid");
        let errors = crate::model::validate_model(&parsed);
        assert!(
            errors.iter().any(|e| e.path.contains("water_heater")),
            "errors: {errors:?}"
        );
    }
}
