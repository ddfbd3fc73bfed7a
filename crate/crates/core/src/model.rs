//! Domain types for the building description and their validity rules.
//!
//! Every symbol the rule catalog consumes (absorptivity, conductivity,
//! canopy geometry, opening areas, COP, F-type, cooling constant, ...) is a
//! field of exactly one type in this module. All types are immutable value
//! data after construction and safe to share across threads.

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Which hemisphere the site is on. Drives the north/south swap of the
/// orientation-keyed prescriptive tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hemisphere {
    Southern,
    Northern,
}

/// Immediate surroundings of the building.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Site {
    pub hemisphere: Hemisphere,
    /// Fraction of the perimeter protected from direct sunlight, in [0, 1].
    pub protected_perimeter_fraction: f64,
    /// Width of the protected strip around the building, metres.
    pub protected_width_m: f64,
}

/// French dwelling size typology, used to size water heaters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FType {
    F1,
    F2,
    F3,
    F4,
    F5,
    #[serde(rename = "F6plus")]
    F6Plus,
}

impl fmt::Display for FType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FType::F1 => "F1",
            FType::F2 => "F2",
            FType::F3 => "F3",
            FType::F4 => "F4",
            FType::F5 => "F5",
            FType::F6Plus => "F6plus",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoomKind {
    /// Bedroom or living room: the rooms whose comfort the standard targets.
    Principal,
    Service,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Room {
    pub name: String,
    pub kind: RoomKind,
    pub floor_area_m2: f64,
    pub volume_m3: f64,
    /// Ceiling wiring reserved for an air fan.
    pub has_fan_ceiling_wiring: bool,
    /// Wall switch wired to that ceiling point.
    pub has_fan_wall_switch: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Facade {
    pub id: String,
    /// Direction the facade faces, degrees clockwise from true north, [0, 360).
    pub orientation_deg: f64,
    /// Id of the facade on the opposite side of the dwelling, when declared.
    #[serde(default)]
    pub opposite_facade_id: Option<String>,
}

/// Wall construction, keyed by its base thermal resistance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WallMaterial {
    /// R = 0.1 m².K/W
    Concrete20cm,
    /// R = 0.2 m².K/W
    HollowConcreteBlocks,
    /// R = 0.5 m².K/W
    Wood,
}

impl WallMaterial {
    /// Base thermal resistance of the bare assembly, m².K/W.
    pub fn base_resistance_m2kw(self) -> f64 {
        match self {
            WallMaterial::Concrete20cm => 0.1,
            WallMaterial::HollowConcreteBlocks => 0.2,
            WallMaterial::Wood => 0.5,
        }
    }
}

impl fmt::Display for WallMaterial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WallMaterial::Concrete20cm => "concrete_20cm",
            WallMaterial::HollowConcreteBlocks => "hollow_concrete_blocks",
            WallMaterial::Wood => "wood",
        };
        f.write_str(s)
    }
}

/// External surface colour, canonicalized to a solar absorptivity bucket.
///
/// Accepted on input either as a name (`"light"`, `"medium"`, `"dark"`) or as
/// a raw absorptivity in [0, 1], which is bucketed: alpha <= 0.5 is light,
/// <= 0.7 medium, else dark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SurfaceColor {
    Light,
    Medium,
    Dark,
}

impl SurfaceColor {
    /// Canonical solar absorptivity for the bucket.
    pub fn alpha(self) -> f64 {
        match self {
            SurfaceColor::Light => 0.4,
            SurfaceColor::Medium => 0.6,
            SurfaceColor::Dark => 0.8,
        }
    }

    /// Bucket a raw absorptivity value.
    pub fn from_alpha(alpha: f64) -> Option<SurfaceColor> {
        if !alpha.is_finite() || !(0.0..=1.0).contains(&alpha) {
            return None;
        }
        Some(if alpha <= 0.5 {
            SurfaceColor::Light
        } else if alpha <= 0.7 {
            SurfaceColor::Medium
        } else {
            SurfaceColor::Dark
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            SurfaceColor::Light => "light",
            SurfaceColor::Medium => "medium",
            SurfaceColor::Dark => "dark",
        }
    }
}

impl fmt::Display for SurfaceColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for SurfaceColor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for SurfaceColor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ColorVisitor;

        impl Visitor<'_> for ColorVisitor {
            type Value = SurfaceColor;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(
                    "one of \"light\", \"medium\", \"dark\", or an absorptivity number in [0, 1]",
                )
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<SurfaceColor, E> {
                match v {
                    "light" => Ok(SurfaceColor::Light),
                    "medium" => Ok(SurfaceColor::Medium),
                    "dark" => Ok(SurfaceColor::Dark),
                    other => Err(E::custom(format!(
                        "unknown color \"{other}\": expected one of \"light\", \"medium\", \
                         \"dark\", or an absorptivity number in [0, 1]"
                    ))),
                }
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<SurfaceColor, E> {
                SurfaceColor::from_alpha(v)
                    .ok_or_else(|| E::custom(format!("absorptivity {v} is outside [0, 1]")))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<SurfaceColor, E> {
                self.visit_f64(v as f64)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<SurfaceColor, E> {
                self.visit_f64(v as f64)
            }
        }

        deserializer.deserialize_any(ColorVisitor)
    }
}

/// Horizontal canopy above a wall: depth `d` over protected height `h`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Canopy {
    pub d_m: f64,
    pub h_m: f64,
}

/// Insulation layer: conductivity in W/(m.K) and thickness in centimetres.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Insulation {
    pub lambda_w_mk: f64,
    pub thickness_cm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallAssembly {
    pub facade_id: String,
    pub material: WallMaterial,
    pub color: SurfaceColor,
    #[serde(default)]
    pub canopy: Option<Canopy>,
    #[serde(default)]
    pub insulation: Option<Insulation>,
    /// Vertical shading screen with an air gap; when present, no other wall
    /// prescription applies regardless of orientation.
    #[serde(default)]
    pub vertical_shading_with_airgap: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoofKind {
    /// Terrace, inclined roof without loft, or closed / barely ventilated loft.
    Simple,
    /// Loft with perimeter ventilation ducts.
    VentilatedLoft,
}

/// Perimeter ventilation openings of a ventilated loft.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoftVent {
    /// Total area of the perimeter openings, m².
    pub openings_area_m2: f64,
    /// Roof area, m².
    pub roof_area_m2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoofAssembly {
    pub kind: RoofKind,
    pub color: SurfaceColor,
    #[serde(default)]
    pub insulation: Option<Insulation>,
    #[serde(default)]
    pub loft_vent: Option<LoftVent>,
}

/// Where an opening sits: in an external facade or in an internal partition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum OpeningPlacement {
    External { facade_id: String },
    Internal,
}

/// Horizontal canopy above a window: depth `d`, raised `a` above the frame.
/// `a_m = 0` means the canopy is flush with the window top.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowShading {
    pub d_m: f64,
    pub a_m: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpeningUnit {
    pub id: String,
    /// Name of the room the opening serves.
    pub room: String,
    pub placement: OpeningPlacement,
    pub net_area_m2: f64,
    pub height_m: f64,
    #[serde(default)]
    pub shading: Option<WindowShading>,
    /// Venetian blinds, opaque mobile strips or an equivalent device.
    #[serde(default)]
    pub other_shading_device: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WaterHeaterKind {
    Solar,
    ElectricStorage,
    ElectricInstant,
    Gas,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolarHeater {
    pub collector_area_m2: f64,
    pub storage_l: f64,
    pub annual_production_kwh_per_m2: f64,
    pub cstb_certified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElectricHeater {
    pub storage_l: f64,
    /// Standing-loss figure of merit; lower is better.
    pub cooling_constant: f64,
    pub nf_marked: bool,
    /// Off-peak servo / override / off commutation switch.
    pub three_position_switch: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GasHeater {
    pub nf_marked: bool,
    pub flue_outlet: bool,
}

/// Domestic hot water production. Exactly one variant payload must be
/// present, matching `kind`; both electric kinds use the `electric` payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaterHeater {
    pub kind: WaterHeaterKind,
    #[serde(default)]
    pub solar: Option<SolarHeater>,
    #[serde(default)]
    pub electric: Option<ElectricHeater>,
    #[serde(default)]
    pub gas: Option<GasHeater>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AcKind {
    WindowUnit,
    SplitSystem,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AcUnit {
    /// Name of the room the unit serves.
    pub room: String,
    pub kind: AcKind,
    /// Cooling output over electrical input (COP).
    pub cooling_efficiency: f64,
    pub cooling_power_w: f64,
    pub room_sealed: bool,
    /// Mechanically controlled air renewal, m³/h.
    pub mech_air_renewal_m3h: f64,
    pub maintenance_contract: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dwelling {
    pub id: String,
    pub f_type: FType,
    pub rooms: Vec<Room>,
    pub facades: Vec<Facade>,
    pub walls: Vec<WallAssembly>,
    pub roof: RoofAssembly,
    pub openings: Vec<OpeningUnit>,
    pub water_heater: WaterHeater,
    #[serde(default)]
    pub ac_units: Vec<AcUnit>,
}

impl Dwelling {
    pub fn facade(&self, id: &str) -> Option<&Facade> {
        self.facades.iter().find(|f| f.id == id)
    }

    pub fn room(&self, name: &str) -> Option<&Room> {
        self.rooms.iter().find(|r| r.name == name)
    }
}

/// The checker's sole input: site description plus dwellings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildingModel {
    pub site: Site,
    pub dwellings: Vec<Dwelling>,
}

/// Cardinal orientation used to key the prescriptive tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cardinal {
    North,
    East,
    South,
    West,
}

impl Cardinal {
    pub const ALL: [Cardinal; 4] = [
        Cardinal::North,
        Cardinal::East,
        Cardinal::South,
        Cardinal::West,
    ];

    /// Snap an azimuth to the nearest cardinal. Sectors are 90 degrees wide,
    /// centred on each cardinal; boundaries go to the clockwise sector
    /// (45 -> east, 135 -> south, 225 -> west, 315 -> north).
    pub fn from_degrees(deg: f64) -> Cardinal {
        // Rotate by 45 so each sector becomes a plain quarter-turn band.
        let sector = (deg + 45.0).rem_euclid(360.0) / 90.0;
        match sector as u32 {
            0 => Cardinal::North,
            1 => Cardinal::East,
            2 => Cardinal::South,
            _ => Cardinal::West,
        }
    }

    /// Swap north and south; east and west are unchanged. Applied before
    /// table lookups on northern-hemisphere sites, whose sun path mirrors
    /// the one the tables were derived for.
    pub fn mirror_north_south(self) -> Cardinal {
        match self {
            Cardinal::North => Cardinal::South,
            Cardinal::South => Cardinal::North,
            other => other,
        }
    }

    /// Orientation key adjusted for the site hemisphere.
    pub fn for_hemisphere(self, hemisphere: Hemisphere) -> Cardinal {
        match hemisphere {
            Hemisphere::Southern => self,
            Hemisphere::Northern => self.mirror_north_south(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Cardinal::North => "north",
            Cardinal::East => "east",
            Cardinal::South => "south",
            Cardinal::West => "west",
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One violated model invariant or unresolvable cross-reference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationError {
    /// Entity path, e.g. `dwellings[0].rooms[0].floor_area_m2`.
    pub path: String,
    pub message: String,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

/// Band of plausible ceiling heights used as a sanity check on room data.
const ROOM_HEIGHT_BAND_M: (f64, f64) = (2.0, 5.0);
/// Sanity bound on a single opening.
const MAX_OPENING_AREA_M2: f64 = 20.0;

struct Validator {
    errors: Vec<ValidationError>,
}

impl Validator {
    fn push(&mut self, path: String, message: impl Into<String>) {
        self.errors.push(ValidationError {
            path,
            message: message.into(),
        });
    }

    fn finite(&mut self, path: &str, value: f64) -> bool {
        if value.is_finite() {
            true
        } else {
            self.push(path.to_string(), "must be a finite number");
            false
        }
    }

    fn positive(&mut self, path: &str, value: f64) {
        if self.finite(path, value) && value <= 0.0 {
            self.push(path.to_string(), format!("must be > 0 (got {value})"));
        }
    }

    fn non_negative(&mut self, path: &str, value: f64) {
        if self.finite(path, value) && value < 0.0 {
            self.push(path.to_string(), format!("must be >= 0 (got {value})"));
        }
    }
}

/// Check every type invariant and cross-reference of the model.
///
/// Returns an empty list iff the model is well-formed. The error list is a
/// pure function of the input, including its order.
pub fn validate_model(building: &BuildingModel) -> Vec<ValidationError> {
    let mut v = Validator { errors: Vec::new() };

    let site = &building.site;
    if v.finite(
        "site.protected_perimeter_fraction",
        site.protected_perimeter_fraction,
    ) && !(0.0..=1.0).contains(&site.protected_perimeter_fraction)
    {
        v.push(
            "site.protected_perimeter_fraction".into(),
            format!(
                "must be within [0, 1] (got {})",
                site.protected_perimeter_fraction
            ),
        );
    }
    v.non_negative("site.protected_width_m", site.protected_width_m);

    for (di, dwelling) in building.dwellings.iter().enumerate() {
        validate_dwelling(&mut v, di, dwelling);
    }

    v.errors
}

fn validate_dwelling(v: &mut Validator, di: usize, d: &Dwelling) {
    let base = format!("dwellings[{di}]");

    if !d.rooms.iter().any(|r| r.kind == RoomKind::Principal) {
        v.push(
            format!("{base}.rooms"),
            "dwelling must have at least one principal room",
        );
    }

    for (i, room) in d.rooms.iter().enumerate() {
        let p = format!("{base}.rooms[{i}]");
        if d.rooms[..i].iter().any(|r| r.name == room.name) {
            v.push(
                format!("{p}.name"),
                format!("duplicate room name \"{}\"", room.name),
            );
        }
        v.positive(&format!("{p}.floor_area_m2"), room.floor_area_m2);
        v.positive(&format!("{p}.volume_m3"), room.volume_m3);
        if room.floor_area_m2 > 0.0 && room.volume_m3 > 0.0 {
            let height = room.volume_m3 / room.floor_area_m2;
            if !(ROOM_HEIGHT_BAND_M.0..=ROOM_HEIGHT_BAND_M.1).contains(&height) {
                v.push(
                    format!("{p}.volume_m3"),
                    format!(
                        "volume / floor area = {height:.2} m is outside the plausible \
                         ceiling-height band [{}, {}]",
                        ROOM_HEIGHT_BAND_M.0, ROOM_HEIGHT_BAND_M.1
                    ),
                );
            }
        }
    }

    for (i, facade) in d.facades.iter().enumerate() {
        let p = format!("{base}.facades[{i}]");
        if d.facades[..i].iter().any(|f| f.id == facade.id) {
            v.push(
                format!("{p}.id"),
                format!("duplicate facade id \"{}\"", facade.id),
            );
        }
        if v.finite(&format!("{p}.orientation_deg"), facade.orientation_deg)
            && !(0.0..360.0).contains(&facade.orientation_deg)
        {
            v.push(
                format!("{p}.orientation_deg"),
                format!("must be within [0, 360) (got {})", facade.orientation_deg),
            );
        }
        if let Some(opp_id) = &facade.opposite_facade_id {
            match d.facade(opp_id) {
                None => v.push(
                    format!("{p}.opposite_facade_id"),
                    format!("references unknown facade \"{opp_id}\""),
                ),
                Some(opp) => {
                    if opp.opposite_facade_id.as_deref() != Some(facade.id.as_str()) {
                        v.push(
                            format!("{p}.opposite_facade_id"),
                            format!(
                                "facade \"{opp_id}\" does not reference \"{}\" back",
                                facade.id
                            ),
                        );
                    }
                }
            }
        }
    }

    for (i, wall) in d.walls.iter().enumerate() {
        let p = format!("{base}.walls[{i}]");
        if d.facade(&wall.facade_id).is_none() {
            v.push(
                format!("{p}.facade_id"),
                format!("references unknown facade \"{}\"", wall.facade_id),
            );
        }
        if let Some(canopy) = &wall.canopy {
            v.positive(&format!("{p}.canopy.d_m"), canopy.d_m);
            v.positive(&format!("{p}.canopy.h_m"), canopy.h_m);
        }
        validate_insulation(v, &p, wall.insulation.as_ref());
    }

    let roof_path = format!("{base}.roof");
    validate_insulation(v, &roof_path, d.roof.insulation.as_ref());
    match (&d.roof.kind, &d.roof.loft_vent) {
        (RoofKind::VentilatedLoft, None) => v.push(
            format!("{roof_path}.loft_vent"),
            "ventilated loft roof requires loft_vent data",
        ),
        (_, Some(vent)) => {
            v.positive(
                &format!("{roof_path}.loft_vent.openings_area_m2"),
                vent.openings_area_m2,
            );
            v.positive(
                &format!("{roof_path}.loft_vent.roof_area_m2"),
                vent.roof_area_m2,
            );
        }
        _ => {}
    }

    for (i, opening) in d.openings.iter().enumerate() {
        let p = format!("{base}.openings[{i}]");
        if d.openings[..i].iter().any(|o| o.id == opening.id) {
            v.push(
                format!("{p}.id"),
                format!("duplicate opening id \"{}\"", opening.id),
            );
        }
        if d.room(&opening.room).is_none() {
            v.push(
                format!("{p}.room"),
                format!("references unknown room \"{}\"", opening.room),
            );
        }
        if let OpeningPlacement::External { facade_id } = &opening.placement {
            if d.facade(facade_id).is_none() {
                v.push(
                    format!("{p}.placement.facade_id"),
                    format!("references unknown facade \"{facade_id}\""),
                );
            }
        }
        v.positive(&format!("{p}.net_area_m2"), opening.net_area_m2);
        if opening.net_area_m2 > MAX_OPENING_AREA_M2 {
            v.push(
                format!("{p}.net_area_m2"),
                format!(
                    "must be <= {MAX_OPENING_AREA_M2} m2 (got {})",
                    opening.net_area_m2
                ),
            );
        }
        v.positive(&format!("{p}.height_m"), opening.height_m);
        if let Some(shading) = &opening.shading {
            v.positive(&format!("{p}.shading.d_m"), shading.d_m);
            v.non_negative(&format!("{p}.shading.a_m"), shading.a_m);
        }
    }

    validate_water_heater(v, &base, &d.water_heater);

    for (i, ac) in d.ac_units.iter().enumerate() {
        let p = format!("{base}.ac_units[{i}]");
        if d.room(&ac.room).is_none() {
            v.push(
                format!("{p}.room"),
                format!("references unknown room \"{}\"", ac.room),
            );
        }
        v.positive(&format!("{p}.cooling_efficiency"), ac.cooling_efficiency);
        v.positive(&format!("{p}.cooling_power_w"), ac.cooling_power_w);
        v.non_negative(
            &format!("{p}.mech_air_renewal_m3h"),
            ac.mech_air_renewal_m3h,
        );
    }
}

fn validate_insulation(v: &mut Validator, parent: &str, insulation: Option<&Insulation>) {
    if let Some(ins) = insulation {
        v.positive(&format!("{parent}.insulation.lambda_w_mk"), ins.lambda_w_mk);
        v.non_negative(
            &format!("{parent}.insulation.thickness_cm"),
            ins.thickness_cm,
        );
    }
}

fn validate_water_heater(v: &mut Validator, base: &str, wh: &WaterHeater) {
    let p = format!("{base}.water_heater");
    let (want_solar, want_electric, want_gas) = match wh.kind {
        WaterHeaterKind::Solar => (true, false, false),
        WaterHeaterKind::ElectricStorage | WaterHeaterKind::ElectricInstant => (false, true, false),
        WaterHeaterKind::Gas => (false, false, true),
    };
    for (present, want, field) in [
        (wh.solar.is_some(), want_solar, "solar"),
        (wh.electric.is_some(), want_electric, "electric"),
        (wh.gas.is_some(), want_gas, "gas"),
    ] {
        if present && !want {
            v.push(
                format!("{p}.{field}"),
                format!("payload does not match kind \"{:?}\"", wh.kind),
            );
        }
        if !present && want {
            v.push(
                format!("{p}.{field}"),
                format!("payload required for kind \"{:?}\"", wh.kind),
            );
        }
    }
    if let Some(solar) = &wh.solar {
        v.positive(
            &format!("{p}.solar.collector_area_m2"),
            solar.collector_area_m2,
        );
        v.non_negative(&format!("{p}.solar.storage_l"), solar.storage_l);
        v.non_negative(
            &format!("{p}.solar.annual_production_kwh_per_m2"),
            solar.annual_production_kwh_per_m2,
        );
    }
    if let Some(electric) = &wh.electric {
        v.non_negative(&format!("{p}.electric.storage_l"), electric.storage_l);
        v.non_negative(
            &format!("{p}.electric.cooling_constant"),
            electric.cooling_constant,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit;

    #[test]
    fn well_formed_fixture_has_no_errors() {
        let model = testkit::compliant_building();
        assert_eq!(validate_model(&model), Vec::new());
    }

    #[test]
    fn negative_floor_area_is_reported_at_its_path() {
        let mut model = testkit::compliant_building();
        model.dwellings[0].rooms[0].floor_area_m2 = -5.0;
        let errors = validate_model(&model);
        assert!(
            errors
                .iter()
                .any(|e| e.path == "dwellings[0].rooms[0].floor_area_m2"),
            "errors: {errors:?}"
        );
    }

    #[test]
    fn dangling_facade_reference_is_reported() {
        let mut model = testkit::compliant_building();
        model.dwellings[0].openings[0].placement = OpeningPlacement::External {
            facade_id: "Z".into(),
        };
        let errors = validate_model(&model);
        assert!(
            errors
                .iter()
                .any(|e| e.path.contains("placement.facade_id") && e.message.contains("\"Z\"")),
            "errors: {errors:?}"
        );
    }

    #[test]
    fn validation_is_deterministic() {
        let mut model = testkit::compliant_building();
        model.dwellings[0].rooms[0].floor_area_m2 = -5.0;
        model.dwellings[0].rooms[1].volume_m3 = f64::NAN;
        assert_eq!(validate_model(&model), validate_model(&model));
    }

    #[test]
    fn nan_values_are_rejected() {
        let mut model = testkit::compliant_building();
        model.site.protected_width_m = f64::NAN;
        let errors = validate_model(&model);
        assert!(errors.iter().any(|e| e.path == "site.protected_width_m"));
    }

    #[test]
    fn color_buckets_follow_alpha_thresholds() {
        assert_eq!(SurfaceColor::from_alpha(0.4), Some(SurfaceColor::Light));
        assert_eq!(SurfaceColor::from_alpha(0.5), Some(SurfaceColor::Light));
        assert_eq!(SurfaceColor::from_alpha(0.51), Some(SurfaceColor::Medium));
        assert_eq!(SurfaceColor::from_alpha(0.7), Some(SurfaceColor::Medium));
        assert_eq!(SurfaceColor::from_alpha(0.71), Some(SurfaceColor::Dark));
        assert_eq!(SurfaceColor::from_alpha(1.2), None);
    }

    #[test]
    fn cardinal_snapping_uses_ninety_degree_sectors() {
        assert_eq!(Cardinal::from_degrees(0.0), Cardinal::North);
        assert_eq!(Cardinal::from_degrees(44.9), Cardinal::North);
        assert_eq!(Cardinal::from_degrees(45.0), Cardinal::East);
        assert_eq!(Cardinal::from_degrees(134.9), Cardinal::East);
        assert_eq!(Cardinal::from_degrees(180.0), Cardinal::South);
        assert_eq!(Cardinal::from_degrees(270.0), Cardinal::West);
        assert_eq!(Cardinal::from_degrees(315.0), Cardinal::North);
        assert_eq!(Cardinal::from_degrees(359.9), Cardinal::North);
    }

    #[test]
    fn hemisphere_mirror_swaps_north_and_south_only() {
        assert_eq!(
            Cardinal::North.for_hemisphere(Hemisphere::Northern),
            Cardinal::South
        );
        assert_eq!(
            Cardinal::East.for_hemisphere(Hemisphere::Northern),
            Cardinal::East
        );
        assert_eq!(
            Cardinal::South.for_hemisphere(Hemisphere::Southern),
            Cardinal::South
        );
    }
}
