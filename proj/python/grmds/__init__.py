"""MDS matrices over Galois rings from skew polynomials."""

import json

from ._core import (
    GrmdsError,
    Ring,
    RingElement,
    SkewPoly,
    build_w_poly,
    chain_report,
    check_quasi_involutory,
    companion,
    determinant,
    is_mds,
    make_ring,
    min_distance,
    right_divides,
    run_cli,
    sigma_norm,
    twisted_chain,
    weight_criterion_support,
)
from ._core import _construct_json


def construct(spec):
    """Build and verify a construction from a spec dict; returns the result as a dict."""
    return json.loads(_construct_json(json.dumps(spec)))


__all__ = [
    "GrmdsError",
    "Ring",
    "RingElement",
    "SkewPoly",
    "build_w_poly",
    "chain_report",
    "check_quasi_involutory",
    "companion",
    "construct",
    "determinant",
    "is_mds",
    "make_ring",
    "min_distance",
    "right_divides",
    "run_cli",
    "sigma_norm",
    "twisted_chain",
    "weight_criterion_support",
]
