"""Quiver polynomials, lacing diagrams and Schubert splitting."""

import json as _json

from . import _quiverlab
from ._quiverlab import QuiverError

__all__ = [
    "QuiverError",
    "component_check",
    "expected_codim",
    "lace_array",
    "quiver_coeffs",
    "quiver_poly",
    "schubert",
    "split_a",
    "theorem2_check",
    "wmin",
    "zelevinsky",
]


def _decoded(fn):
    def wrapper(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# Rank conditions are passed as (n, r) with r[i][j - i] = r_ij.
zelevinsky = _decoded(_quiverlab.zelevinsky)
lace_array = _decoded(_quiverlab.lace_array)
wmin = _decoded(_quiverlab.wmin)
quiver_poly = _decoded(_quiverlab.quiver_poly)
quiver_coeffs = _decoded(_quiverlab.quiver_coeffs)
component_check = _decoded(_quiverlab.component_check)
schubert = _decoded(_quiverlab.schubert)
split_a = _decoded(_quiverlab.split_a)
theorem2_check = _decoded(_quiverlab.theorem2_check)
expected_codim = _quiverlab.expected_codim
