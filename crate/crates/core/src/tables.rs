//! Prescriptive lookup tables and the conductivity scaling rule.
//!
//! All thickness cells are in centimetres. Cells are tabulated at the two
//! reference conductivities 0.041 and 0.029 W/(m.K); any other conductivity
//! is served by scaling the 0.041 cell at equal thermal resistance and
//! rounding up to the next 0.1 cm. A lookup returns `None` when the tables
//! simply have no prescription for that configuration (dark walls, dark
//! roofs over a ventilated loft): callers decide how to treat the gap.

use crate::model::{Cardinal, FType, RoofKind, SurfaceColor, WallMaterial};
use serde::Serialize;

/// Reference conductivity the main thickness columns are tabulated at, W/(m.K).
pub const LAMBDA_REF: f64 = 0.041;
/// Secondary tabulated conductivity, W/(m.K).
pub const LAMBDA_ALT: f64 = 0.029;

/// Round a thickness up to the next 0.1 cm. The small slack keeps values
/// that are a hair above an exact tenth (from float noise) from being bumped
/// a full extra tenth.
fn ceil_tenth_cm(cm: f64) -> f64 {
    (cm * 10.0 - 1e-9).ceil() / 10.0
}

/// Scale a thickness tabulated at `LAMBDA_REF` to conductivity `lambda`,
/// preserving thermal resistance, rounded up to the next 0.1 cm.
pub fn scale_thickness_cm(thickness_at_ref_cm: f64, lambda: f64) -> f64 {
    ceil_tenth_cm(thickness_at_ref_cm * lambda / LAMBDA_REF)
}

fn pick(lambda: f64, at_ref: f64, at_alt: f64) -> f64 {
    if lambda == LAMBDA_REF {
        at_ref
    } else if lambda == LAMBDA_ALT {
        at_alt
    } else {
        scale_thickness_cm(at_ref, lambda)
    }
}

/// Minimum roof insulation thickness in cm for insulation of conductivity
/// `lambda`, or `None` when no prescription exists (dark ventilated loft).
pub fn roof_insulation_min_cm(kind: RoofKind, color: SurfaceColor, lambda: f64) -> Option<f64> {
    let (at_ref, at_alt) = match (kind, color) {
        (RoofKind::Simple, SurfaceColor::Light) => (5.0, 4.0),
        (RoofKind::Simple, SurfaceColor::Medium) => (8.0, 6.0),
        (RoofKind::Simple, SurfaceColor::Dark) => (10.0, 8.0),
        (RoofKind::VentilatedLoft, SurfaceColor::Light) => (0.0, 0.0),
        (RoofKind::VentilatedLoft, SurfaceColor::Medium) => (2.0, 0.0),
        (RoofKind::VentilatedLoft, SurfaceColor::Dark) => return None,
    };
    Some(pick(lambda, at_ref, at_alt))
}

/// Minimum loft perimeter-opening to roof-area ratio for a ventilated loft.
pub const LOFT_VENT_MIN_RATIO: f64 = 0.15;

/// Minimum canopy depth/height ratio protecting a wall, or `None` when the
/// canopy route is not tabulated for this configuration (dark walls).
pub fn wall_canopy_min_ratio(
    material: WallMaterial,
    color: SurfaceColor,
    orientation: Cardinal,
) -> Option<f64> {
    use Cardinal::*;
    use SurfaceColor::*;
    use WallMaterial::*;
    let row: [f64; 4] = match (material, color) {
        (Concrete20cm, Light) => [0.4, 0.2, 0.7, 0.5],
        (Concrete20cm, Medium) => [1.0, 0.5, 1.3, 0.7],
        (HollowConcreteBlocks, Light) => [0.1, 0.1, 0.3, 0.2],
        (HollowConcreteBlocks, Medium) => [0.5, 0.3, 0.8, 0.5],
        (Wood, Light) => [0.0, 0.0, 0.0, 0.0],
        (Wood, Medium) => [0.0, 0.0, 0.2, 0.1],
        (_, Dark) => return None,
    };
    let idx = match orientation {
        East => 0,
        South => 1,
        West => 2,
        North => 3,
    };
    Some(row[idx])
}

/// Minimum wall insulation thickness in cm at conductivity `lambda`, or
/// `None` when the insulation route is not tabulated (dark walls).
pub fn wall_insulation_min_cm(
    material: WallMaterial,
    color: SurfaceColor,
    orientation: Cardinal,
    lambda: f64,
) -> Option<f64> {
    use Cardinal::*;
    use SurfaceColor::*;
    use WallMaterial::*;
    let row: [f64; 4] = match (material, color) {
        (Concrete20cm, Light) => [1.0, 1.0, 1.0, 1.0],
        (Concrete20cm, Medium) => [2.0, 1.0, 2.0, 2.0],
        (HollowConcreteBlocks, Light) => [1.0, 1.0, 1.0, 1.0],
        (HollowConcreteBlocks, Medium) => [1.0, 1.0, 2.0, 2.0],
        (Wood, Light) => [0.0, 0.0, 0.0, 0.0],
        (Wood, Medium) => [0.0, 0.0, 1.0, 1.0],
        (_, Dark) => return None,
    };
    let idx = match orientation {
        East => 0,
        South => 1,
        West => 2,
        North => 3,
    };
    let at_ref = row[idx];
    Some(if lambda == LAMBDA_REF {
        at_ref
    } else {
        scale_thickness_cm(at_ref, lambda)
    })
}

/// Minimum d/(2a + h) ratio for a canopy shading a window.
pub fn window_shading_min_ratio(orientation: Cardinal) -> f64 {
    match orientation {
        Cardinal::East => 0.8,
        Cardinal::South => 0.3,
        Cardinal::West => 1.0,
        Cardinal::North => 0.6,
    }
}

/// Minimum solar collector area in m² by dwelling type.
pub fn solar_collector_min_m2(f_type: FType) -> f64 {
    match f_type {
        FType::F1 | FType::F2 => 1.5,
        FType::F3 => 2.0,
        FType::F4 => 2.5,
        FType::F5 => 3.0,
        FType::F6Plus => 3.5,
    }
}

/// Solar storage volume per collector area band, L/m².
pub const SOLAR_STORAGE_PER_M2_L: (f64, f64) = (60.0, 120.0);
/// Minimum certified annual production of a solar collector, kWh/m².
pub const SOLAR_MIN_PRODUCTION_KWH_M2: f64 = 700.0;

/// Minimum electric storage volume in litres by dwelling type.
pub fn electric_storage_min_l(f_type: FType) -> f64 {
    match f_type {
        FType::F1 | FType::F2 => 100.0,
        FType::F3 => 150.0,
        FType::F4 => 200.0,
        FType::F5 => 250.0,
        FType::F6Plus => 300.0,
    }
}

/// Maximum cooling constant of an electric storage heater by dwelling type.
pub fn electric_cooling_constant_max(f_type: FType) -> f64 {
    match f_type {
        FType::F1 | FType::F2 => 0.32,
        FType::F3 => 0.23,
        FType::F4 => 0.22,
        FType::F5 => 0.22,
        FType::F6Plus => 0.22,
    }
}

/// One row of a thickness table dump, both tabulated conductivities.
#[derive(Debug, Clone, Serialize)]
pub struct RoofRow {
    pub kind: &'static str,
    pub color: &'static str,
    /// `None` when the configuration has no prescription.
    pub min_cm_at_0_041: Option<f64>,
    pub min_cm_at_0_029: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WallRow {
    pub material: &'static str,
    pub color: &'static str,
    pub orientation: &'static str,
    pub canopy_min_d_over_h: Option<f64>,
    pub insulation_min_cm_at_0_041: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowRow {
    pub orientation: &'static str,
    pub min_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct WaterHeaterRow {
    pub f_type: String,
    pub solar_collector_min_m2: f64,
    pub electric_storage_min_l: f64,
    pub electric_cooling_constant_max: f64,
}

/// Complete dump of the prescriptive tables, for the `tables` subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct TablesDump {
    pub roof: Vec<RoofRow>,
    pub walls: Vec<WallRow>,
    pub windows: Vec<WindowRow>,
    pub water_heaters: Vec<WaterHeaterRow>,
}

const COLORS: [SurfaceColor; 3] = [
    SurfaceColor::Light,
    SurfaceColor::Medium,
    SurfaceColor::Dark,
];
const MATERIALS: [WallMaterial; 3] = [
    WallMaterial::Concrete20cm,
    WallMaterial::HollowConcreteBlocks,
    WallMaterial::Wood,
];
const F_TYPES: [FType; 6] = [
    FType::F1,
    FType::F2,
    FType::F3,
    FType::F4,
    FType::F5,
    FType::F6Plus,
];

/// Enumerate every cell of every table.
pub fn dump() -> TablesDump {
    let mut roof = Vec::new();
    for kind in [RoofKind::Simple, RoofKind::VentilatedLoft] {
        for color in COLORS {
            roof.push(RoofRow {
                kind: match kind {
                    RoofKind::Simple => "simple",
                    RoofKind::VentilatedLoft => "ventilated_loft",
                },
                color: color.name(),
                min_cm_at_0_041: roof_insulation_min_cm(kind, color, LAMBDA_REF),
                min_cm_at_0_029: roof_insulation_min_cm(kind, color, LAMBDA_ALT),
            });
        }
    }

    let mut walls = Vec::new();
    for material in MATERIALS {
        for color in COLORS {
            for orientation in [
                Cardinal::East,
                Cardinal::South,
                Cardinal::West,
                Cardinal::North,
            ] {
                walls.push(WallRow {
                    material: match material {
                        WallMaterial::Concrete20cm => "concrete_20cm",
                        WallMaterial::HollowConcreteBlocks => "hollow_concrete_blocks",
                        WallMaterial::Wood => "wood",
                    },
                    color: color.name(),
                    orientation: orientation.name(),
                    canopy_min_d_over_h: wall_canopy_min_ratio(material, color, orientation),
                    insulation_min_cm_at_0_041: wall_insulation_min_cm(
                        material,
                        color,
                        orientation,
                        LAMBDA_REF,
                    ),
                });
            }
        }
    }

    let windows = [
        Cardinal::East,
        Cardinal::South,
        Cardinal::West,
        Cardinal::North,
    ]
    .into_iter()
    .map(|o| WindowRow {
        orientation: o.name(),
        min_ratio: window_shading_min_ratio(o),
    })
    .collect();

    let water_heaters = F_TYPES
        .into_iter()
        .map(|f| WaterHeaterRow {
            f_type: f.to_string(),
            solar_collector_min_m2: solar_collector_min_m2(f),
            electric_storage_min_l: electric_storage_min_l(f),
            electric_cooling_constant_max: electric_cooling_constant_max(f),
        })
        .collect();

    TablesDump {
        roof,
        walls,
        windows,
        water_heaters,
    }
}
