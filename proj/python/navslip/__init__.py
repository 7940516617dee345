"""Python access to the navslip C++ core."""

import json as _json

from . import _navslip
from ._navslip import (
    NavslipError,
    catalog_names,
    field_value,
    normal,
    parse_config,
    robin_root,
    snapshot_roundtrip,
    tstar_estimate,
)

__all__ = [
    "NavslipError",
    "catalog_names",
    "divcurl_base_check",
    "field_value",
    "fit_rate",
    "normal",
    "parse_config",
    "persistence_check",
    "robin_root",
    "simulate",
    "snapshot_roundtrip",
    "tstar_estimate",
]


def divcurl_base_check(name="rigid_rotation", seed=42):
    return _json.loads(_navslip.divcurl_base_check(name, seed))


def persistence_check(u0, omega0, surface, x0):
    return _json.loads(_navslip.persistence_check(u0, omega0, surface, list(x0)))


def fit_rate(points):
    return _json.loads(_navslip.fit_rate([tuple(p) for p in points]))


def simulate(config_text):
    """Run the channel solver from INI text; returns the energy report."""
    return _json.loads(_navslip.simulate(config_text))
