"""JSON config files and the built-in presets."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .arith import as_rational, format_rational
from .k_stability import ConfigError, TwoOrbitConfig
from .root_system import DiagramError, DynkinDiagram

_REQUIRED = ("name", "diagram", "omega_Y", "omega_Z", "dim_X", "codim", "epsilon", "minus_KX_multiple", "E_class")
_OPTIONAL = ("symmetrizer_scales",)

PRESETS: dict[str, dict[str, Any]] = {
    "pas-f4": {
        "name": "pas-f4",
        "diagram": "F4",
        "omega_Y": ["1", "0", "0", "0"],
        "omega_Z": ["0", "0", "1", "0"],
        "dim_X": 23,
        "codim": 3,
        "epsilon": "8",
        "minus_KX_multiple": 8,
        "E_class": {"a_Y": -1, "a_X": 1},
        "symmetrizer_scales": ["1/2"],
    },
    "pas-a1g2": {
        "name": "pas-a1g2",
        "diagram": "A1xG2",
        "omega_Y": ["0", "0", "1"],
        "omega_Z": ["1", "1", "0"],
        "dim_X": 8,
        "codim": 2,
        "epsilon": "3",
        "minus_KX_multiple": 6,
        "E_class": {"a_Y": -1, "a_X": 2},
        "symmetrizer_scales": ["1", "1"],
    },
}


def _int(doc: dict, key: str) -> int:
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{key} must be an integer")
    return value


def _rational(value: Any, key: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float) or not isinstance(value, (int, str)):
        raise ConfigError(f"{key} must be a rational given as a string or an integer")
    try:
        return as_rational(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{key}: {exc}") from exc


def _rationals(value: Any, key: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise ConfigError(f"{key} must be an array")
    return tuple(_rational(v, key) for v in value)


def parse_config(doc: dict[str, Any]) -> TwoOrbitConfig:
    """Validate a decoded config document and build the config object."""
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    unknown = sorted(set(doc) - set(_REQUIRED) - set(_OPTIONAL))
    if unknown:
        raise ConfigError(f"unknown keys: {', '.join(unknown)}")
    missing = [k for k in _REQUIRED if k not in doc]
    if missing:
        raise ConfigError(f"missing keys: {', '.join(missing)}")
    if not isinstance(doc["name"], str):
        raise ConfigError("name must be a string")
    try:
        diagram = DynkinDiagram.parse(doc["diagram"]) if isinstance(doc["diagram"], str) else None
    except DiagramError as exc:
        raise ConfigError(str(exc)) from exc
    if diagram is None:
        raise ConfigError("diagram must be a string such as 'F4' or 'A1xG2'")

    e_class = doc["E_class"]
    if not isinstance(e_class, dict) or set(e_class) != {"a_Y", "a_X"}:
        raise ConfigError("E_class must be an object with exactly the keys a_Y and a_X")
    scales = doc.get("symmetrizer_scales")
    if scales is not None:
        scales = _rationals(scales, "symmetrizer_scales")
        if len(scales) != len(diagram.components):
            raise ConfigError("symmetrizer_scales needs one entry per diagram component")
        if any(s <= 0 for s in scales):
            raise ConfigError("symmetrizer_scales must be positive")

    return TwoOrbitConfig(
        name=doc["name"],
        diagram=diagram,
        omega_Y=_rationals(doc["omega_Y"], "omega_Y"),
        omega_Z=_rationals(doc["omega_Z"], "omega_Z"),
        dim_X=_int(doc, "dim_X"),
        codim=_int(doc, "codim"),
        epsilon=_rational(doc["epsilon"], "epsilon"),
        minus_KX_multiple=_int(doc, "minus_KX_multiple"),
        E_class=(_int(e_class, "a_Y"), _int(e_class, "a_X")),
        symmetrizer_scales=scales,
    )


def load_config(path: str | Path) -> TwoOrbitConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
    return parse_config(doc)


def config_to_dict(cfg: TwoOrbitConfig) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": cfg.name,
        "diagram": str(cfg.diagram),
        "omega_Y": [format_rational(c) for c in cfg.omega_Y],
        "omega_Z": [format_rational(c) for c in cfg.omega_Z],
        "dim_X": cfg.dim_X,
        "codim": cfg.codim,
        "epsilon": format_rational(cfg.epsilon),
        "minus_KX_multiple": cfg.minus_KX_multiple,
        "E_class": {"a_Y": cfg.a_Y, "a_X": cfg.a_X},
    }
    if cfg.symmetrizer_scales is not None:
        doc["symmetrizer_scales"] = [format_rational(s) for s in cfg.symmetrizer_scales]
    return doc


def preset(name: str) -> TwoOrbitConfig:
    if name not in PRESETS:
        raise KeyError(name)
    return parse_config(PRESETS[name])
