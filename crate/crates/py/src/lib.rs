//! Python bindings: a thin JSON-in / JSON-out wrapper over the core crate,
//! plus a dict-based ventilation estimator.

use ecodom_core::rules::RuleId;
use ecodom_core::ventsim;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn parse(json: &str) -> PyResult<ecodom_core::BuildingModel> {
    ecodom_core::parse_building(json).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn parse_rules(rules: Option<Vec<String>>) -> PyResult<Vec<RuleId>> {
    match rules {
        None => Ok(RuleId::ALL.to_vec()),
        Some(names) => names
            .iter()
            .map(|n| n.parse::<RuleId>().map_err(PyValueError::new_err))
            .collect(),
    }
}

/// Check a building description (JSON string) and return the report as a
/// JSON string. Raises ValueError on parse or validation errors.
#[pyfunction]
#[pyo3(signature = (json, rules=None))]
fn check_document(json: &str, rules: Option<Vec<String>>) -> PyResult<String> {
    let building = parse(json)?;
    let errors = ecodom_core::validate_model(&building);
    if !errors.is_empty() {
        let joined = errors
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(PyValueError::new_err(format!("invalid building: {joined}")));
    }
    let report = ecodom_core::build_report(&building, &parse_rules(rules)?);
    Ok(ecodom_core::render_json(&report))
}

/// Validate a building description; returns a list of "path: message"
/// strings, empty when the document is well-formed.
#[pyfunction]
fn validate_document(json: &str) -> PyResult<Vec<String>> {
    let building = parse(json)?;
    Ok(ecodom_core::validate_model(&building)
        .iter()
        .map(|e| e.to_string())
        .collect())
}

/// Rewrite a building description in its canonical form (fixed field order,
/// four-decimal floats).
#[pyfunction]
fn canonical_document(json: &str) -> PyResult<String> {
    Ok(ecodom_core::serialize_building(&parse(json)?))
}

/// Digest (`sha256:<hex>`) of the canonical form of a building description.
#[pyfunction]
fn document_digest(json: &str) -> PyResult<String> {
    Ok(ecodom_core::building_digest(&parse(json)?))
}

/// Estimate cross-ventilation for a single-zone scenario; returns a dict
/// with the solved pressures, flow, air change rate, and comfort flags.
#[pyfunction]
#[pyo3(signature = (
    wind_speed_ms=4.0,
    area_windward_m2=2.0,
    area_leeward_m2=2.0,
    volume_m3=175.0,
    cross_section_m2=17.5,
    discharge_coefficient=0.61,
    cp_windward=0.6,
    cp_leeward=-0.3,
    air_density_kg_m3=1.2,
))]
#[allow(clippy::too_many_arguments)]
fn vent_estimate(
    py: Python<'_>,
    wind_speed_ms: f64,
    area_windward_m2: f64,
    area_leeward_m2: f64,
    volume_m3: f64,
    cross_section_m2: f64,
    discharge_coefficient: f64,
    cp_windward: f64,
    cp_leeward: f64,
    air_density_kg_m3: f64,
) -> PyResult<Py<PyDict>> {
    let scenario = ventsim::VentScenario {
        wind_speed_ms,
        area_windward_m2,
        area_leeward_m2,
        volume_m3,
        cross_section_m2,
        discharge_coefficient,
        cp_windward,
        cp_leeward,
        air_density_kg_m3,
    };
    scenario.validate().map_err(PyValueError::new_err)?;
    let result = ventsim::estimate(&scenario);
    let dict = PyDict::new(py);
    dict.set_item("dynamic_pressure_pa", result.dynamic_pressure_pa)?;
    dict.set_item("pressure_windward_pa", result.pressure_windward_pa)?;
    dict.set_item("pressure_leeward_pa", result.pressure_leeward_pa)?;
    dict.set_item("internal_pressure_pa", result.internal_pressure_pa)?;
    dict.set_item("residual_m3s", result.residual_m3s)?;
    dict.set_item("flow_m3s", result.flow_m3s)?;
    dict.set_item("ach_per_h", result.ach_per_h)?;
    dict.set_item("indoor_speed_ms", result.indoor_speed_ms)?;
    dict.set_item("meets_ach_target", result.meets_ach_target)?;
    dict.set_item("in_speed_band", result.in_speed_band)?;
    Ok(dict.into())
}

/// The prescriptive lookup tables as a JSON string.
#[pyfunction]
fn table_dump() -> PyResult<String> {
    serde_json_string(&ecodom_core::tables::dump())
}

fn serde_json_string<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string_pretty(value).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn ecodom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(check_document, m)?)?;
    m.add_function(wrap_pyfunction!(validate_document, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_document, m)?)?;
    m.add_function(wrap_pyfunction!(document_digest, m)?)?;
    m.add_function(wrap_pyfunction!(vent_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(table_dump, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("SCHEMA_VERSION", ecodom_core::SCHEMA_VERSION)?;
    Ok(())
}
