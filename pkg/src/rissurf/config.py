"""Run configuration: one JSON document per invocation, validated before any computation."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import jsonschema
import numpy as np

from .errors import RisError
from .power import ar_unitary_em, ar_unitary_z

SCHEMA_VERSION = 1

_num = {"type": "number"}
_pos = {"type": "number", "exclusiveMinimum": 0}
_angle = {"type": "number", "exclusiveMinimum": -90, "exclusiveMaximum": 90}
_count = {"type": "integer", "minimum": 1}


def _obj(props, required=()):
    return {"type": "object", "properties": props, "required": list(required), "additionalProperties": False}


PROFILE_SCHEMA = {
    "oneOf": [
        _obj({"kind": {"const": "specular"}, "phi0": _num}, ["kind"]),
        _obj({"kind": {"const": "anomalous"}, "phibar_t": _num, "phibar_r": _num, "phi0": _num},
             ["kind", "phibar_t", "phibar_r"]),
        _obj({"kind": {"const": "anomalous_angles"}, "theta_t_deg": _angle, "theta_r_deg": _angle, "phi0": _num},
             ["kind", "theta_t_deg", "theta_r_deg"]),
        _obj({"kind": {"const": "focusing"}, "x_f": _num, "y_f": _pos}, ["kind", "x_f", "y_f"]),
    ]
}

SCHEMA = _obj(
    {
        "schema": {"const": SCHEMA_VERSION},
        "medium": _obj({"frequency_hz": _pos}, ["frequency_hz"]),
        "geometry": _obj(
            {
                "theta_i_deg": _angle,
                "theta_r_deg": _angle,
                "P0": _pos,
                "ar_law": {
                    "oneOf": [
                        {"enum": ["unit", "em_unitary", "z_unitary"]},
                        _obj({"custom": _pos}, ["custom"]),
                    ]
                },
            },
            ["theta_i_deg", "theta_r_deg"],
        ),
        "propagation": _obj(
            {"x_T": _num, "y_T": _pos, "x_R": _num, "y_R": _pos, "L_x": _pos, "profile": PROFILE_SCHEMA},
            ["L_x"],
        ),
        "output": _obj(
            {
                "csv_path": {"type": "string", "minLength": 1},
                "samples": _count,
                "theta_r_max_deg": {"type": "integer", "minimum": 0, "maximum": 89},
                "distance": _obj({"min_m": _pos, "max_m": _pos, "points": {"type": "integer", "minimum": 2},
                                  "theta_deg": _angle}),
                "map": _obj({"x_min": _num, "x_max": _num, "nx": _count, "y_min": _pos, "y_max": _pos,
                             "ny": _count, "anomalous_theta_deg": _angle, "focus": {
                                 "type": "array", "items": _num, "minItems": 2, "maxItems": 2}}),
            }
        ),
    },
    ["schema", "medium"],
)


class ConfigError(RisError):
    """The configuration document is unreadable or violates the schema."""


@dataclass(frozen=True)
class ScenarioConfig:
    raw: dict

    def section(self, name: str) -> dict:
        return self.raw.get(name, {})

    def require(self, name: str) -> dict:
        if name not in self.raw:
            raise ConfigError(f"section '{name}' is required for this command")
        return self.raw[name]

    @property
    def frequency(self) -> float:
        return float(self.raw["medium"]["frequency_hz"])

    def angles(self) -> tuple[float, float]:
        g = self.require("geometry")
        return np.deg2rad(g["theta_i_deg"]), np.deg2rad(g["theta_r_deg"])

    @property
    def P0(self) -> float:
        return float(self.section("geometry").get("P0", 1.0))

    def ar(self, theta_i: float | None = None, theta_r: float | None = None) -> float:
        ti, tr = self.angles()
        ti = ti if theta_i is None else theta_i
        tr = tr if theta_r is None else theta_r
        return ar_from_law(self.section("geometry").get("ar_law", "unit"), ti, tr)

    def output(self, key: str, default=None):
        return self.section("output").get(key, default)


def ar_from_law(law, theta_i: float, theta_r: float) -> float:
    if isinstance(law, dict):
        return float(law["custom"])
    if law == "unit":
        return 1.0
    if law == "em_unitary":
        return ar_unitary_em(theta_i, theta_r)
    if law == "z_unitary":
        return ar_unitary_z(theta_i, theta_r)
    raise ConfigError(f"unknown ar_law {law!r}")


def validate(doc) -> ScenarioConfig:
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"{where}: {exc.message}") from None
    return ScenarioConfig(doc)


def load_config(path) -> ScenarioConfig:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return validate(doc)
