#!/usr/bin/env python3
"""Smoke test for the ecodom Python extension.

Builds nothing itself: expects `cargo build -p ecodom-py` to have produced
target/debug/libecodom.so (or .dylib). Stages the library under the import
name `ecodom` in a temp directory, imports it, and exercises every binding
against the renovation fixtures.

Run from anywhere:  python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "crates" / "core" / "tests" / "fixtures"


def stage_module(tmp: Path) -> None:
    candidates = [
        REPO / "target" / "debug" / "libecodom.so",
        REPO / "target" / "debug" / "libecodom.dylib",
        REPO / "target" / "release" / "libecodom.so",
        REPO / "target" / "release" / "libecodom.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not built; run `cargo build -p ecodom-py` first")
    suffix = ".so" if sys.platform != "win32" else ".pyd"
    shutil.copy2(built, tmp / f"ecodom{suffix}")
    sys.path.insert(0, str(tmp))


def check(label: str, ok: bool, detail: str = "") -> None:
    if not ok:
        sys.exit(f"FAIL {label}{': ' + detail if detail else ''}")
    print(f"ok {label}")


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        stage_module(Path(tmp))
        import ecodom

        check("import", ecodom.SCHEMA_VERSION == 1, f"schema {ecodom.SCHEMA_VERSION}")

        initial = (FIXTURES / "ladecouverte_initial.json").read_text()
        modified = (FIXTURES / "ladecouverte_modified.json").read_text()

        report = json.loads(ecodom.check_document(initial))
        rules = [f["rule"] for f in report["findings"]]
        check(
            "check_document finds the two violations",
            report["verdict"] == "non_compliant" and rules == ["R-ROOF", "R-VENT"],
            json.dumps(rules),
        )

        filtered = json.loads(ecodom.check_document(initial, rules=["R-VENT"]))
        check(
            "rule filter narrows the report",
            [f["rule"] for f in filtered["findings"]] == ["R-VENT"],
        )

        fixed = json.loads(ecodom.check_document(modified))
        check(
            "modified design is compliant",
            fixed["verdict"] == "compliant" and fixed["findings"] == [],
        )

        check("validate_document accepts the fixture", ecodom.validate_document(initial) == [])
        broken = json.loads(initial)
        broken["dwellings"][0]["rooms"][0]["floor_area_m2"] = -1.0
        errors = ecodom.validate_document(json.dumps(broken))
        check(
            "validate_document reports the offending path",
            any("rooms[0].floor_area_m2" in e for e in errors),
            repr(errors),
        )

        canonical = ecodom.canonical_document(initial)
        check(
            "canonical form is a fixed point",
            ecodom.canonical_document(canonical) == canonical,
        )
        digest = ecodom.document_digest(initial)
        check(
            "digest matches the report digest",
            digest.startswith("sha256:") and digest == report["digest"],
            digest,
        )

        vent = ecodom.vent_estimate()
        check(
            "vent_estimate reference scenario",
            abs(vent["ach_per_h"] - 67.3427) < 0.01
            and vent["meets_ach_target"]
            and not vent["in_speed_band"]
            and abs(vent["residual_m3s"]) < 1e-9,
            json.dumps(vent),
        )
        calm = ecodom.vent_estimate(wind_speed_ms=1.0)
        check(
            "vent_estimate responds to keywords",
            calm["ach_per_h"] < vent["ach_per_h"],
        )
        try:
            ecodom.vent_estimate(area_windward_m2=0.0)
        except ValueError:
            check("vent_estimate rejects a zero opening", True)
        else:
            sys.exit("FAIL vent_estimate accepted a zero opening")

        tables = json.loads(ecodom.table_dump())
        check(
            "table_dump carries the full catalog",
            len(tables["roof"]) == 6
            and len(tables["walls"]) == 36
            and len(tables["windows"]) == 4
            and len(tables["water_heaters"]) == 6,
        )

        print("all smoke checks passed")


if __name__ == "__main__":
    main()
