"""Self-orthogonal and self-dual AG codes from the curves y^q + y = x^m.

Thin Python front end over the C++ core. Field elements are integers
(the base-p digits are the polynomial coefficients, lowest degree first).
"""

import json

from ._core import (
    DEFAULT_DISTANCE_BUDGET,
    BudgetExceeded,
    CurveError,
    FamilySpec,
    Field,
    FieldError,
    HypothesisError,
    as_roots,
    build,
    count_points,
    dual_identity_check,
    exact_distance,
    herm_add,
    herm_mult,
    quantum_params,
    ranges,
    sampled_upper_bound,
)
from . import _core

__all__ = [
    "DEFAULT_DISTANCE_BUDGET",
    "BudgetExceeded",
    "CurveError",
    "FamilySpec",
    "Field",
    "FieldError",
    "HypothesisError",
    "as_roots",
    "build",
    "count_points",
    "dual_identity_check",
    "exact_distance",
    "herm_add",
    "herm_mult",
    "quantum_params",
    "ranges",
    "sampled_upper_bound",
    "sweep",
    "verify",
]


def verify(spec, r, *, distance_budget=DEFAULT_DISTANCE_BUDGET, samples=0, seed=0,
           dual_identity_max_n=256, threads=0):
    """Run every check at radius r; returns the report as a dict."""
    return json.loads(_core._verify_json(spec, r, distance_budget, samples, seed,
                                         dual_identity_max_n, threads))


def sweep(spec, *, distance_budget=DEFAULT_DISTANCE_BUDGET, samples=0, seed=0,
          dual_identity_max_n=256, extended=False, threads=0):
    """Verify every radius of the theorem ranges (all radii with extended=True)."""
    return json.loads(_core._sweep_json(spec, distance_budget, samples, seed,
                                        dual_identity_max_n, extended, threads))
