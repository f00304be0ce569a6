"""Capacities of small holes in planar domains and eigenvalue splitting."""

import json

from ._holecap import (
    AnalyticGerm,
    ClosedCurve,
    DomainError,
    HoleSetting,
    SolverError,
    concentric_capacity,
    concentric_eigenvalues,
    direct_capacity,
    disk_eigenvalues,
    eccentric_eigenvalues,
    q_form,
    r0,
)
from . import _holecap

__all__ = [
    "AnalyticGerm",
    "ClosedCurve",
    "DomainError",
    "HoleSetting",
    "SolverError",
    "concentric_capacity",
    "concentric_eigenvalues",
    "direct_capacity",
    "disk_eigenvalues",
    "eccentric_eigenvalues",
    "expansion",
    "predict",
    "q_form",
    "r0",
    "validate",
]


def expansion(setting, germ_a, germ_b, order=3):
    """Coefficients of the small-eps capacity series as a dict."""
    return json.loads(_holecap.expansion_json(setting, germ_a, germ_b, order))


def predict(index, x0=(0.0, 0.0), hole=None, eps=(1e-2, 1e-3), nodes=256):
    """Splitting report for the index-th disk eigenvalue (1-based)."""
    hole = hole if hole is not None else ClosedCurve.circle(1.0)
    return json.loads(_holecap.predict_json(index, list(x0), hole, list(eps), nodes))


def validate(ids=range(1, 11), seed=0):
    """Runs acceptance criteria and returns the summary dict."""
    return json.loads(_holecap.validate_json(list(ids), seed))
