//! The prescriptive rule catalog.
//!
//! Each rule is a pure function from the model to a list of findings; a
//! compliant input produces an empty list. Findings carry the measured and
//! required quantities wherever the requirement is numeric, so reports can
//! show exactly how far a design is from passing, and a stable entity path
//! so repeated runs order output identically.

use crate::model::{
    BuildingModel, Cardinal, Dwelling, Hemisphere, OpeningPlacement, RoofKind, RoomKind, Site,
    SurfaceColor, WaterHeaterKind,
};
use crate::tables;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Identifier of one rule in the catalog, in catalog order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "R-SITE")]
    Site,
    #[serde(rename = "R-ROOF")]
    Roof,
    #[serde(rename = "R-WALL")]
    Wall,
    #[serde(rename = "R-WIN")]
    Window,
    #[serde(rename = "R-VENT")]
    Vent,
    #[serde(rename = "R-FAN")]
    Fan,
    #[serde(rename = "R-AC")]
    Ac,
    #[serde(rename = "R-DHW")]
    Dhw,
}

impl RuleId {
    pub const ALL: [RuleId; 8] = [
        RuleId::Site,
        RuleId::Roof,
        RuleId::Wall,
        RuleId::Window,
        RuleId::Vent,
        RuleId::Fan,
        RuleId::Ac,
        RuleId::Dhw,
    ];

    pub fn code(self) -> &'static str {
        match self {
            RuleId::Site => "R-SITE",
            RuleId::Roof => "R-ROOF",
            RuleId::Wall => "R-WALL",
            RuleId::Window => "R-WIN",
            RuleId::Vent => "R-VENT",
            RuleId::Fan => "R-FAN",
            RuleId::Ac => "R-AC",
            RuleId::Dhw => "R-DHW",
        }
    }

    /// Point of the five-point prescription the rule belongs to:
    /// 1 site, 2 envelope, 3 ventilation, 4 hot water, 5 air conditioning.
    pub fn prescription_point(self) -> u8 {
        match self {
            RuleId::Site => 1,
            RuleId::Roof | RuleId::Wall | RuleId::Window => 2,
            RuleId::Vent | RuleId::Fan => 3,
            RuleId::Dhw => 4,
            RuleId::Ac => 5,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase();
        let norm = norm.strip_prefix("R-").unwrap_or(&norm);
        match norm {
            "SITE" => Ok(RuleId::Site),
            "ROOF" => Ok(RuleId::Roof),
            "WALL" => Ok(RuleId::Wall),
            "WIN" | "WINDOW" => Ok(RuleId::Window),
            "VENT" => Ok(RuleId::Vent),
            "FAN" => Ok(RuleId::Fan),
            "AC" => Ok(RuleId::Ac),
            "DHW" => Ok(RuleId::Dhw),
            _ => Err(format!(
                "unknown rule \"{s}\": expected one of R-SITE, R-ROOF, R-WALL, R-WIN, \
                 R-VENT, R-FAN, R-AC, R-DHW"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Fail,
    Warn,
    Info,
}

/// Direction of a numeric requirement: how `measured` must relate to
/// `required` for the check to pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparator {
    AtLeast,
    AtMost,
    GreaterThan,
}

impl Comparator {
    /// Operator describing the violation, for text output.
    pub fn violated_symbol(self) -> &'static str {
        match self {
            Comparator::AtLeast => "<",
            Comparator::AtMost => ">",
            Comparator::GreaterThan => "<=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Quantity {
    pub value: f64,
    pub unit: String,
}

impl Quantity {
    fn new(value: f64, unit: &str) -> Quantity {
        Quantity {
            value,
            unit: unit.to_string(),
        }
    }
}

/// One rule violation, tied to the entity that caused it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Finding {
    pub rule: RuleId,
    pub prescription_point: u8,
    pub severity: Severity,
    /// Id of the dwelling the finding belongs to; empty for building-level
    /// findings (site).
    pub dwelling_id: String,
    /// Path of the offending entity within the dwelling (or building for
    /// site findings), e.g. `walls[2].canopy`.
    pub entity_path: String,
    pub measured: Option<Quantity>,
    pub required: Option<Quantity>,
    pub comparator: Option<Comparator>,
    pub message: String,
    pub remediation: Option<String>,
}

impl Finding {
    fn fail(rule: RuleId, dwelling_id: &str, entity_path: &str, message: String) -> Finding {
        Finding {
            rule,
            prescription_point: rule.prescription_point(),
            severity: Severity::Fail,
            dwelling_id: dwelling_id.to_string(),
            entity_path: entity_path.to_string(),
            measured: None,
            required: None,
            comparator: None,
            message,
            remediation: None,
        }
    }

    fn quantified(
        mut self,
        measured: f64,
        required: f64,
        unit: &str,
        comparator: Comparator,
    ) -> Finding {
        self.measured = Some(Quantity::new(measured, unit));
        self.required = Some(Quantity::new(required, unit));
        self.comparator = Some(comparator);
        self
    }

    fn remedy(mut self, remediation: String) -> Finding {
        self.remediation = Some(remediation);
        self
    }
}

/// Strict lower bound on the protected perimeter share.
pub const SITE_MIN_PROTECTED_FRACTION: f64 = 0.75;
/// Minimum width of the protected strip, m.
pub const SITE_MIN_PROTECTED_WIDTH_M: f64 = 3.0;
/// Minimum openable share of the mean principal floor area, per facade.
pub const VENT_MIN_PERMEABILITY: f64 = 0.25;
/// Minimum cooling efficiency by unit kind.
pub const AC_MIN_COP_WINDOW: f64 = 2.5;
pub const AC_MIN_COP_SPLIT: f64 = 3.0;
/// Maximum installed cooling power per square metre of the cooled room.
pub const AC_MAX_POWER_W_PER_M2: f64 = 80.0;
/// Minimum mechanically controlled air renewal of a cooled room, m³/h.
pub const AC_MIN_AIR_RENEWAL_M3H: f64 = 25.0;

pub fn check_site(site: &Site) -> Vec<Finding> {
    let mut findings = Vec::new();
    if site.protected_perimeter_fraction <= SITE_MIN_PROTECTED_FRACTION {
        findings.push(
            Finding::fail(
                RuleId::Site,
                "",
                "site.protected_perimeter_fraction",
                "the protected share of the perimeter must exceed 0.75".to_string(),
            )
            .quantified(
                site.protected_perimeter_fraction,
                SITE_MIN_PROTECTED_FRACTION,
                "ratio",
                Comparator::GreaterThan,
            )
            .remedy(
                "extend vegetation or shading structures until more than three quarters of \
                 the perimeter is protected from direct sun"
                    .to_string(),
            ),
        );
    }
    if site.protected_width_m < SITE_MIN_PROTECTED_WIDTH_M {
        findings.push(
            Finding::fail(
                RuleId::Site,
                "",
                "site.protected_width_m",
                "the protected strip around the building must be at least 3 m wide".to_string(),
            )
            .quantified(
                site.protected_width_m,
                SITE_MIN_PROTECTED_WIDTH_M,
                "m",
                Comparator::AtLeast,
            )
            .remedy("widen the planted or shaded strip to 3 m".to_string()),
        );
    }
    findings
}

pub fn check_roof(dwelling: &Dwelling) -> Vec<Finding> {
    let mut findings = Vec::new();
    let roof = &dwelling.roof;
    let (lambda, thickness) = match &roof.insulation {
        Some(ins) => (ins.lambda_w_mk, ins.thickness_cm),
        None => (tables::LAMBDA_REF, 0.0),
    };

    let (required, fallback) = match tables::roof_insulation_min_cm(roof.kind, roof.color, lambda) {
        Some(r) => (r, false),
        // No prescription exists for this configuration; hold it to the
        // simple-roof requirement for the same color, which can only be
        // stricter than whatever the missing cell would have said.
        None => (
            tables::roof_insulation_min_cm(RoofKind::Simple, roof.color, lambda)
                .expect("simple roofs are tabulated for every color"),
            true,
        ),
    };

    if thickness < required {
        let mut message = format!(
            "roof insulation is below the prescriptive minimum for a {} {} roof",
            roof.color,
            match roof.kind {
                RoofKind::Simple => "simple",
                RoofKind::VentilatedLoft => "ventilated-loft",
            }
        );
        if fallback {
            message.push_str(
                "; the tables carry no prescription for this configuration, so the \
                 simple-roof requirement is applied as a conservative fallback",
            );
        }
        findings.push(
            Finding::fail(
                RuleId::Roof,
                &dwelling.id,
                "roof.insulation.thickness_cm",
                message,
            )
            .quantified(thickness, required, "cm", Comparator::AtLeast)
            .remedy(format!(
                "increase the insulation to at least {required:.1} cm at the installed \
                     conductivity, or lighten the roof finish"
            )),
        );
    }

    if roof.kind == RoofKind::VentilatedLoft {
        match &roof.loft_vent {
            Some(vent) if vent.roof_area_m2 > 0.0 => {
                let ratio = vent.openings_area_m2 / vent.roof_area_m2;
                if ratio < tables::LOFT_VENT_MIN_RATIO {
                    findings.push(
                        Finding::fail(
                            RuleId::Roof,
                            &dwelling.id,
                            "roof.loft_vent",
                            "loft perimeter openings are too small relative to the roof area"
                                .to_string(),
                        )
                        .quantified(
                            ratio,
                            tables::LOFT_VENT_MIN_RATIO,
                            "ratio",
                            Comparator::AtLeast,
                        )
                        .remedy(
                            "enlarge the loft ventilation openings to at least 15% of the \
                             roof area"
                                .to_string(),
                        ),
                    );
                }
            }
            _ => {
                findings.push(Finding::fail(
                    RuleId::Roof,
                    &dwelling.id,
                    "roof.loft_vent",
                    "a ventilated loft needs measured perimeter openings and roof area".to_string(),
                ));
            }
        }
    }
    findings
}

pub fn check_walls(dwelling: &Dwelling, hemisphere: Hemisphere) -> Vec<Finding> {
    let mut findings = Vec::new();
    for (i, wall) in dwelling.walls.iter().enumerate() {
        let Some(facade) = dwelling.facade(&wall.facade_id) else {
            continue; // dangling reference is a validation error, not a rule
        };
        if wall.vertical_shading_with_airgap {
            continue;
        }
        let orientation = Cardinal::from_degrees(facade.orientation_deg).for_hemisphere(hemisphere);
        let canopy_req = tables::wall_canopy_min_ratio(wall.material, wall.color, orientation);
        let (ins_lambda, ins_thickness) = match &wall.insulation {
            Some(ins) => (ins.lambda_w_mk, ins.thickness_cm),
            None => (tables::LAMBDA_REF, 0.0),
        };
        let ins_req =
            tables::wall_insulation_min_cm(wall.material, wall.color, orientation, ins_lambda);

        let (Some(canopy_req), Some(ins_req)) = (canopy_req, ins_req) else {
            findings.push(
                Finding::fail(
                    RuleId::Wall,
                    &dwelling.id,
                    &format!("walls[{i}].color"),
                    format!(
                        "no prescriptive route exists for a dark {} wall facing {}",
                        wall.material, orientation
                    ),
                )
                .quantified(
                    wall.color.alpha(),
                    SurfaceColor::Medium.alpha(),
                    "alpha",
                    Comparator::AtMost,
                )
                .remedy(
                    "lighten the finish to a solar absorptivity of 0.6 or less, or add \
                     vertical shading with an air gap"
                        .to_string(),
                ),
            );
            continue;
        };

        if canopy_req == 0.0 || ins_req == 0.0 {
            continue; // the tables ask nothing of this configuration
        }

        let canopy_ratio = wall.canopy.as_ref().map(|c| c.d_m / c.h_m);
        let canopy_ok = canopy_ratio.is_some_and(|r| r >= canopy_req);
        let insulation_ok = ins_thickness >= ins_req;
        if canopy_ok || insulation_ok {
            continue;
        }

        let routes = format!(
            "extend the canopy to d/h >= {canopy_req}, or insulate to at least {ins_req:.1} cm \
             at the installed conductivity, or add vertical shading with an air gap"
        );
        let finding = match canopy_ratio {
            Some(ratio) => Finding::fail(
                RuleId::Wall,
                &dwelling.id,
                &format!("walls[{i}].canopy"),
                format!(
                    "the canopy over this {} {} wall facing {} is too shallow",
                    wall.color, wall.material, orientation
                ),
            )
            .quantified(ratio, canopy_req, "ratio", Comparator::AtLeast),
            None if wall.insulation.is_some() => Finding::fail(
                RuleId::Wall,
                &dwelling.id,
                &format!("walls[{i}].insulation.thickness_cm"),
                format!(
                    "insulation on this {} {} wall facing {} is below the prescriptive minimum",
                    wall.color, wall.material, orientation
                ),
            )
            .quantified(ins_thickness, ins_req, "cm", Comparator::AtLeast),
            None => Finding::fail(
                RuleId::Wall,
                &dwelling.id,
                &format!("walls[{i}]"),
                format!(
                    "this {} {} wall facing {} has no solar protection",
                    wall.color, wall.material, orientation
                ),
            )
            .quantified(0.0, ins_req, "cm", Comparator::AtLeast),
        };
        findings.push(finding.remedy(routes));
    }
    findings
}

pub fn check_windows(dwelling: &Dwelling, hemisphere: Hemisphere) -> Vec<Finding> {
    let mut findings = Vec::new();
    for (i, opening) in dwelling.openings.iter().enumerate() {
        let OpeningPlacement::External { facade_id } = &opening.placement else {
            continue;
        };
        let Some(room) = dwelling.room(&opening.room) else {
            continue;
        };
        if room.kind != RoomKind::Principal || opening.other_shading_device {
            continue;
        }
        let Some(facade) = dwelling.facade(facade_id) else {
            continue;
        };
        let orientation = Cardinal::from_degrees(facade.orientation_deg).for_hemisphere(hemisphere);
        let required = tables::window_shading_min_ratio(orientation);
        let ratio = opening
            .shading
            .as_ref()
            .map(|s| s.d_m / (2.0 * s.a_m + opening.height_m))
            .unwrap_or(0.0);
        if ratio >= required {
            continue;
        }
        findings.push(
            Finding::fail(
                RuleId::Window,
                &dwelling.id,
                &format!("openings[{i}].shading"),
                format!(
                    "the opening of principal room \"{}\" lacks sufficient shading for a \
                     facade facing {}",
                    opening.room, orientation
                ),
            )
            .quantified(ratio, required, "ratio", Comparator::AtLeast)
            .remedy(format!(
                "deepen the canopy until d/(2a+h) reaches {required}, or fit venetian \
                 blinds or opaque mobile strips"
            )),
        );
    }
    findings
}

/// Cross-ventilation figures for the governing pair of opposite facades.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Permeability {
    pub facade_1: String,
    pub facade_2: String,
    /// Principal floor area opening on each side, m².
    pub sp1_m2: f64,
    pub sp2_m2: f64,
    /// Mean principal floor area the ratios are computed against, m².
    pub sp_m2: f64,
    /// External opening area of principal rooms on each side, m².
    pub so1_m2: f64,
    pub so2_m2: f64,
    /// Internal opening area serving each side, m².
    pub si1_m2: f64,
    pub si2_m2: f64,
    /// Permeability ratios So/Sp.
    pub p1: f64,
    pub p2: f64,
}

struct SideEval {
    facade_index: usize,
    sp: f64,
    so: f64,
    si: f64,
}

fn eval_side(dwelling: &Dwelling, facade_id: &str, facade_index: usize) -> SideEval {
    let mut sp = 0.0;
    let mut so = 0.0;
    let mut si = 0.0;
    for room in &dwelling.rooms {
        if room.kind != RoomKind::Principal {
            continue;
        }
        let mut opens_here = false;
        for opening in &dwelling.openings {
            if opening.room != room.name {
                continue;
            }
            if let OpeningPlacement::External { facade_id: fid } = &opening.placement {
                if fid == facade_id {
                    opens_here = true;
                    so += opening.net_area_m2;
                }
            }
        }
        if opens_here {
            sp += room.floor_area_m2;
            si += dwelling
                .openings
                .iter()
                .filter(|o| o.room == room.name && o.placement == OpeningPlacement::Internal)
                .map(|o| o.net_area_m2)
                .sum::<f64>();
        }
    }
    SideEval {
        facade_index,
        sp,
        so,
        si,
    }
}

fn opposite_pairs(dwelling: &Dwelling) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (i, facade) in dwelling.facades.iter().enumerate() {
        let Some(opp_id) = &facade.opposite_facade_id else {
            continue;
        };
        let Some(j) = dwelling.facades.iter().position(|f| &f.id == opp_id) else {
            continue;
        };
        if i < j && dwelling.facades[j].opposite_facade_id.as_deref() == Some(facade.id.as_str()) {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Evaluate cross-ventilation for the governing pair of opposite facades:
/// the declared pair whose worse side has the highest permeability. Returns
/// `None` when no pair has external openings of principal rooms on both
/// sides (that situation is reported as a structural finding instead).
pub fn compute_permeability(dwelling: &Dwelling) -> Option<Permeability> {
    let mut best: Option<Permeability> = None;
    for (i, j) in opposite_pairs(dwelling) {
        let side1 = eval_side(dwelling, &dwelling.facades[i].id, i);
        let side2 = eval_side(dwelling, &dwelling.facades[j].id, j);
        if side1.so <= 0.0 || side2.so <= 0.0 {
            continue;
        }
        let sp = 0.5 * (side1.sp + side2.sp);
        let candidate = Permeability {
            facade_1: dwelling.facades[side1.facade_index].id.clone(),
            facade_2: dwelling.facades[side2.facade_index].id.clone(),
            sp1_m2: side1.sp,
            sp2_m2: side2.sp,
            sp_m2: sp,
            so1_m2: side1.so,
            so2_m2: side2.so,
            si1_m2: side1.si,
            si2_m2: side2.si,
            p1: side1.so / sp,
            p2: side2.so / sp,
        };
        let better = match &best {
            None => true,
            Some(b) => candidate.p1.min(candidate.p2) > b.p1.min(b.p2),
        };
        if better {
            best = Some(candidate);
        }
    }
    best
}

pub fn check_ventilation(dwelling: &Dwelling) -> Vec<Finding> {
    let mut findings = Vec::new();

    for (i, room) in dwelling.rooms.iter().enumerate() {
        if room.kind != RoomKind::Principal {
            continue;
        }
        let has_external = dwelling.openings.iter().any(|o| {
            o.room == room.name && matches!(o.placement, OpeningPlacement::External { .. })
        });
        if !has_external {
            findings.push(
                Finding::fail(
                    RuleId::Vent,
                    &dwelling.id,
                    &format!("rooms[{i}]"),
                    format!("principal room \"{}\" has no external opening", room.name),
                )
                .remedy("give the room a window or door-window on an external facade".to_string()),
            );
        }
    }

    let Some(perm) = compute_permeability(dwelling) else {
        findings.push(
            Finding::fail(
                RuleId::Vent,
                &dwelling.id,
                "facades",
                "no pair of opposite facades has external openings of principal rooms on \
                 both sides, so no cross-draught can form"
                    .to_string(),
            )
            .remedy(
                "arrange openable areas of principal rooms on two opposite facades".to_string(),
            ),
        );
        return findings;
    };

    let required_so = VENT_MIN_PERMEABILITY * perm.sp_m2;
    let min_so = perm.so1_m2.min(perm.so2_m2);
    let sides = [
        (perm.facade_1.clone(), perm.so1_m2, perm.p1, perm.si1_m2),
        (perm.facade_2.clone(), perm.so2_m2, perm.p2, perm.si2_m2),
    ];
    for (facade_id, so, p, si) in sides {
        let facade_index = dwelling
            .facades
            .iter()
            .position(|f| f.id == facade_id)
            .unwrap_or(0);
        if so < required_so {
            findings.push(
                Finding::fail(
                    RuleId::Vent,
                    &dwelling.id,
                    &format!("facades[{facade_index}]"),
                    format!(
                        "external openings of principal rooms on facade \"{facade_id}\" give \
                         a permeability of {p:.4}; at least {VENT_MIN_PERMEABILITY} of the \
                         mean principal floor area ({:.2} m2) must be openable",
                        perm.sp_m2
                    ),
                )
                .quantified(so, required_so, "m2", Comparator::AtLeast)
                .remedy(format!(
                    "enlarge openings on facade \"{facade_id}\" to at least {required_so:.2} \
                     m2, for example by replacing windows with door-windows"
                )),
            );
        }
        if si < min_so {
            findings.push(
                Finding::fail(
                    RuleId::Vent,
                    &dwelling.id,
                    &format!("facades[{facade_index}].internal_openings"),
                    format!(
                        "internal openings serving facade \"{facade_id}\" are smaller than \
                         the smaller external opening area of the pair, throttling the \
                         cross-draught indoors"
                    ),
                )
                .quantified(si, min_so, "m2", Comparator::AtLeast)
                .remedy(format!(
                    "widen internal doorways serving facade \"{facade_id}\" to at least \
                     {min_so:.2} m2"
                )),
            );
        }
    }
    findings
}

pub fn check_fans(dwelling: &Dwelling) -> Vec<Finding> {
    let mut findings = Vec::new();
    for (i, room) in dwelling.rooms.iter().enumerate() {
        let missing = match (room.has_fan_ceiling_wiring, room.has_fan_wall_switch) {
            (true, true) => continue,
            (false, true) => "ceiling wiring for a fan",
            (true, false) => "a wall switch for the fan point",
            (false, false) => "both ceiling wiring and a wall switch for a fan",
        };
        findings.push(
            Finding::fail(
                RuleId::Fan,
                &dwelling.id,
                &format!("rooms[{i}]"),
                format!("room \"{}\" lacks {missing}", room.name),
            )
            .remedy(
                "fit a ceiling point able to carry a fan and a dedicated wall switch".to_string(),
            ),
        );
    }
    findings
}

pub fn check_ac(dwelling: &Dwelling) -> Vec<Finding> {
    let mut findings = Vec::new();
    for (i, ac) in dwelling.ac_units.iter().enumerate() {
        let path = |field: &str| format!("ac_units[{i}].{field}");
        let (min_cop, kind_name) = match ac.kind {
            crate::model::AcKind::WindowUnit => (AC_MIN_COP_WINDOW, "window unit"),
            crate::model::AcKind::SplitSystem => (AC_MIN_COP_SPLIT, "split system"),
        };
        if ac.cooling_efficiency < min_cop {
            findings.push(
                Finding::fail(
                    RuleId::Ac,
                    &dwelling.id,
                    &path("cooling_efficiency"),
                    format!("cooling efficiency is below the minimum for a {kind_name}"),
                )
                .quantified(ac.cooling_efficiency, min_cop, "COP", Comparator::AtLeast)
                .remedy(format!("select a unit with a COP of at least {min_cop}")),
            );
        }
        if let Some(room) = dwelling.room(&ac.room) {
            let max_power = AC_MAX_POWER_W_PER_M2 * room.floor_area_m2;
            if ac.cooling_power_w > max_power {
                findings.push(
                    Finding::fail(
                        RuleId::Ac,
                        &dwelling.id,
                        &path("cooling_power_w"),
                        format!(
                            "cooling power exceeds {AC_MAX_POWER_W_PER_M2:.0} W per m2 of \
                             room \"{}\"",
                            ac.room
                        ),
                    )
                    .quantified(ac.cooling_power_w, max_power, "W", Comparator::AtMost)
                    .remedy(format!(
                        "size the unit to at most {max_power:.0} W for this room"
                    )),
                );
            }
        }
        if ac.mech_air_renewal_m3h < AC_MIN_AIR_RENEWAL_M3H {
            findings.push(
                Finding::fail(
                    RuleId::Ac,
                    &dwelling.id,
                    &path("mech_air_renewal_m3h"),
                    "mechanically controlled air renewal of the cooled room is below the \
                     minimum"
                        .to_string(),
                )
                .quantified(
                    ac.mech_air_renewal_m3h,
                    AC_MIN_AIR_RENEWAL_M3H,
                    "m3/h",
                    Comparator::AtLeast,
                )
                .remedy("provide at least 25 m3/h of controlled fresh air".to_string()),
            );
        }
        if !ac.room_sealed {
            findings.push(
                Finding::fail(
                    RuleId::Ac,
                    &dwelling.id,
                    &path("room_sealed"),
                    "the cooled room is not sealed against uncontrolled air exchange".to_string(),
                )
                .remedy(
                    "weather-strip the room and keep its envelope closed while cooling".to_string(),
                ),
            );
        }
        if !ac.maintenance_contract {
            findings.push(
                Finding::fail(
                    RuleId::Ac,
                    &dwelling.id,
                    &path("maintenance_contract"),
                    "no maintenance contract covers the unit".to_string(),
                )
                .remedy("contract periodic maintenance for the unit".to_string()),
            );
        }
    }
    findings
}

pub fn check_water_heater(dwelling: &Dwelling) -> Vec<Finding> {
    let mut findings = Vec::new();
    let wh = &dwelling.water_heater;
    let f_type = dwelling.f_type;
    let fail =
        |path: &str, message: String| Finding::fail(RuleId::Dhw, &dwelling.id, path, message);

    match wh.kind {
        WaterHeaterKind::ElectricInstant => {
            findings.push(
                fail(
                    "water_heater.kind",
                    "instantaneous electric water heating is not permitted".to_string(),
                )
                .remedy(
                    "install solar, electric storage, or gas hot-water production instead"
                        .to_string(),
                ),
            );
        }
        WaterHeaterKind::Solar => {
            let Some(solar) = &wh.solar else {
                findings.push(fail(
                    "water_heater.solar",
                    "solar payload is missing".to_string(),
                ));
                return findings;
            };
            if !solar.cstb_certified {
                findings.push(
                    fail(
                        "water_heater.solar.cstb_certified",
                        "the solar water heater lacks CSTB certification".to_string(),
                    )
                    .remedy("use a certified collector and tank package".to_string()),
                );
            }
            let min_area = tables::solar_collector_min_m2(f_type);
            if solar.collector_area_m2 < min_area {
                findings.push(
                    fail(
                        "water_heater.solar.collector_area_m2",
                        format!(
                            "solar collector area is below the minimum for an {f_type} dwelling"
                        ),
                    )
                    .quantified(solar.collector_area_m2, min_area, "m2", Comparator::AtLeast)
                    .remedy(format!("install at least {min_area} m2 of collectors")),
                );
            }
            if solar.collector_area_m2 > 0.0 {
                let ratio = solar.storage_l / solar.collector_area_m2;
                let (lo, hi) = tables::SOLAR_STORAGE_PER_M2_L;
                if ratio < lo {
                    findings.push(
                        fail(
                            "water_heater.solar.storage_l",
                            "storage volume per collector area is below the 60-120 L/m2 band"
                                .to_string(),
                        )
                        .quantified(ratio, lo, "L/m2", Comparator::AtLeast)
                        .remedy("enlarge the storage tank".to_string()),
                    );
                } else if ratio > hi {
                    findings.push(
                        fail(
                            "water_heater.solar.storage_l",
                            "storage volume per collector area is above the 60-120 L/m2 band"
                                .to_string(),
                        )
                        .quantified(ratio, hi, "L/m2", Comparator::AtMost)
                        .remedy("reduce the tank or enlarge the collector field".to_string()),
                    );
                }
            }
            if solar.annual_production_kwh_per_m2 < tables::SOLAR_MIN_PRODUCTION_KWH_M2 {
                findings.push(
                    fail(
                        "water_heater.solar.annual_production_kwh_per_m2",
                        "certified annual production of the collector is below the minimum"
                            .to_string(),
                    )
                    .quantified(
                        solar.annual_production_kwh_per_m2,
                        tables::SOLAR_MIN_PRODUCTION_KWH_M2,
                        "kWh/m2",
                        Comparator::AtLeast,
                    )
                    .remedy(
                        "choose a collector certified for at least 700 kWh/m2 a year".to_string(),
                    ),
                );
            }
        }
        WaterHeaterKind::ElectricStorage => {
            let Some(electric) = &wh.electric else {
                findings.push(fail(
                    "water_heater.electric",
                    "electric payload is missing".to_string(),
                ));
                return findings;
            };
            if !electric.nf_marked {
                findings.push(
                    fail(
                        "water_heater.electric.nf_marked",
                        "the storage heater lacks the NF mark".to_string(),
                    )
                    .remedy("use an NF-marked storage heater".to_string()),
                );
            }
            let min_storage = tables::electric_storage_min_l(f_type);
            if electric.storage_l < min_storage {
                findings.push(
                    fail(
                        "water_heater.electric.storage_l",
                        format!("storage volume is below the minimum for an {f_type} dwelling"),
                    )
                    .quantified(electric.storage_l, min_storage, "L", Comparator::AtLeast)
                    .remedy(format!("install a tank of at least {min_storage:.0} L")),
                );
            }
            let max_constant = tables::electric_cooling_constant_max(f_type);
            if electric.cooling_constant > max_constant {
                findings.push(
                    fail(
                        "water_heater.electric.cooling_constant",
                        format!("the tank loses heat faster than allowed for an {f_type} dwelling"),
                    )
                    .quantified(
                        electric.cooling_constant,
                        max_constant,
                        "1/day",
                        Comparator::AtMost,
                    )
                    .remedy("choose a better-insulated tank".to_string()),
                );
            }
            if !electric.three_position_switch {
                findings.push(
                    fail(
                        "water_heater.electric.three_position_switch",
                        "no 3-position switch (off-peak servo / forced / off) controls the heater"
                            .to_string(),
                    )
                    .remedy("wire the heater through a 3-position switch".to_string()),
                );
            }
        }
        WaterHeaterKind::Gas => {
            let Some(gas) = &wh.gas else {
                findings.push(fail(
                    "water_heater.gas",
                    "gas payload is missing".to_string(),
                ));
                return findings;
            };
            if !gas.nf_marked {
                findings.push(
                    fail(
                        "water_heater.gas.nf_marked",
                        "the gas heater lacks the NF mark".to_string(),
                    )
                    .remedy("use an NF-marked appliance".to_string()),
                );
            }
            if !gas.flue_outlet {
                findings.push(
                    fail(
                        "water_heater.gas.flue_outlet",
                        "combustion products are not taken outside through a flue outlet"
                            .to_string(),
                    )
                    .remedy("fit a flue taking combustion products outside".to_string()),
                );
            }
        }
    }
    findings
}

/// Summary attached to the report for each dwelling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DwellingSummary {
    pub dwelling_id: String,
    /// `None` when no opposite facade pair is evaluable.
    pub permeability: Option<Permeability>,
}

pub fn dwelling_summaries(building: &BuildingModel) -> Vec<DwellingSummary> {
    building
        .dwellings
        .iter()
        .map(|d| DwellingSummary {
            dwelling_id: d.id.clone(),
            permeability: compute_permeability(d),
        })
        .collect()
}

/// Run a subset of the catalog over the whole building. Findings come back
/// sorted by (dwelling, catalog order, entity path); building-level findings
/// sort first through their empty dwelling id.
pub fn check_rules(building: &BuildingModel, rules: &[RuleId]) -> Vec<Finding> {
    let mut findings = Vec::new();
    for rule in RuleId::ALL {
        if !rules.contains(&rule) {
            continue;
        }
        match rule {
            RuleId::Site => findings.extend(check_site(&building.site)),
            _ => {
                for dwelling in &building.dwellings {
                    let batch = match rule {
                        RuleId::Roof => check_roof(dwelling),
                        RuleId::Wall => check_walls(dwelling, building.site.hemisphere),
                        RuleId::Window => check_windows(dwelling, building.site.hemisphere),
                        RuleId::Vent => check_ventilation(dwelling),
                        RuleId::Fan => check_fans(dwelling),
                        RuleId::Ac => check_ac(dwelling),
                        RuleId::Dhw => check_water_heater(dwelling),
                        RuleId::Site => unreachable!(),
                    };
                    findings.extend(batch);
                }
            }
        }
    }
    findings.sort_by(|a, b| {
        (a.dwelling_id.as_str(), a.rule, a.entity_path.as_str()).cmp(&(
            b.dwelling_id.as_str(),
            b.rule,
            b.entity_path.as_str(),
        ))
    });
    findings
}

/// Run the complete catalog.
pub fn check_all(building: &BuildingModel) -> Vec<Finding> {
    check_rules(building, &RuleId::ALL)
}
