"""Graded polynomial identities of upper-triangular matrix algebras over finite fields."""

import json

from ._gradid import (
    CapExceeded,
    ParseError,
    check_identity,
    closure_rank,
    commutator,
    field_info,
    generators,
    lemma_suite,
    normalize,
    reduce,
    spanning_family,
    verify_basis_json,
)

__all__ = [
    "CapExceeded",
    "ParseError",
    "check_identity",
    "closure_rank",
    "commutator",
    "field_info",
    "generators",
    "lemma_suite",
    "normalize",
    "reduce",
    "spanning_family",
    "verify_basis",
    "verify_basis_json",
]


def verify_basis(preset, q, yvars, zvars, max_deg, **kwargs):
    """Run the basis verification and return the report as a dict."""
    return json.loads(verify_basis_json(preset, q, yvars, zvars, max_deg, **kwargs))
