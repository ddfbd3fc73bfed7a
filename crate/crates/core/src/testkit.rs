//! Builders for tests and examples. Not part of the stable API.
//!
//! The reference building here is engineered to sit exactly on every
//! inclusive boundary of the catalog: permeability 0.25 on both facades,
//! COP 2.5 on a window unit, cooling power at 80 W/m², air renewal at
//! 25 m³/h, a 3 m protected strip, and an F3 storage heater at 150 L with a
//! cooling constant of 0.23. It must check out with zero findings; nudge
//! any field to manufacture a violation.

use crate::model::*;

fn room(name: &str, kind: RoomKind, floor_area_m2: f64) -> Room {
    Room {
        name: name.to_string(),
        kind,
        floor_area_m2,
        volume_m3: floor_area_m2 * 2.5,
        has_fan_ceiling_wiring: true,
        has_fan_wall_switch: true,
    }
}

/// A single-dwelling building that satisfies the whole catalog.
pub fn compliant_building() -> BuildingModel {
    let rooms = vec![
        room("living", RoomKind::Principal, 20.0),
        room("bedroom", RoomKind::Principal, 12.0),
        room("kitchen", RoomKind::Service, 8.0),
        room("bathroom", RoomKind::Service, 4.0),
    ];

    let facades = vec![
        Facade {
            id: "N".to_string(),
            orientation_deg: 0.0,
            opposite_facade_id: Some("S".to_string()),
        },
        Facade {
            id: "S".to_string(),
            orientation_deg: 180.0,
            opposite_facade_id: Some("N".to_string()),
        },
    ];

    let wall = |facade: &str| WallAssembly {
        facade_id: facade.to_string(),
        material: WallMaterial::Wood,
        color: SurfaceColor::Light,
        canopy: None,
        insulation: None,
        vertical_shading_with_airgap: false,
    };

    let external = |id: &str, room: &str, facade: &str, area: f64, height: f64| OpeningUnit {
        id: id.to_string(),
        room: room.to_string(),
        placement: OpeningPlacement::External {
            facade_id: facade.to_string(),
        },
        net_area_m2: area,
        height_m: height,
        shading: None,
        other_shading_device: true,
    };
    let internal = |id: &str, room: &str, area: f64| OpeningUnit {
        id: id.to_string(),
        room: room.to_string(),
        placement: OpeningPlacement::Internal,
        net_area_m2: area,
        height_m: 2.1,
        shading: None,
        other_shading_device: false,
    };

    let openings = vec![
        external("w1", "living", "N", 4.0, 2.0),
        external("w2", "bedroom", "S", 2.0, 1.5),
        external("w3", "bedroom", "S", 2.0, 1.5),
        internal("d1", "living", 4.0),
        internal("d2", "bedroom", 4.0),
    ];

    let dwelling = Dwelling {
        id: "A1".to_string(),
        f_type: FType::F3,
        rooms,
        facades,
        walls: vec![wall("N"), wall("S")],
        roof: RoofAssembly {
            kind: RoofKind::VentilatedLoft,
            color: SurfaceColor::Light,
            insulation: None,
            loft_vent: Some(LoftVent {
                openings_area_m2: 4.0,
                roof_area_m2: 20.0,
            }),
        },
        openings,
        water_heater: WaterHeater {
            kind: WaterHeaterKind::ElectricStorage,
            solar: None,
            electric: Some(ElectricHeater {
                storage_l: 150.0,
                cooling_constant: 0.23,
                nf_marked: true,
                three_position_switch: true,
            }),
            gas: None,
        },
        ac_units: vec![AcUnit {
            room: "living".to_string(),
            kind: AcKind::WindowUnit,
            cooling_efficiency: 2.5,
            cooling_power_w: 1600.0,
            room_sealed: true,
            mech_air_renewal_m3h: 25.0,
            maintenance_contract: true,
        }],
    };

    BuildingModel {
        site: Site {
            hemisphere: Hemisphere::Southern,
            protected_perimeter_fraction: 0.8,
            protected_width_m: 3.0,
        },
        dwellings: vec![dwelling],
    }
}
