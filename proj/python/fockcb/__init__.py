"""Canonical bases of higher-level Fock spaces and decomposition matrices of
Ariki-Koike algebras whose parameters are powers of one root of unity.

Multipartitions are passed as strings: components joined by ``|``, parts
joined by ``.``, the empty component written ``-`` (for example
``"1|3.1|2.1.1"``). Parameters are the order ``e`` of the root of unity and
the list ``v`` of charges, which also fixes the level ``d = len(v)``.
"""

import json as _json
from fractions import Fraction as _Fraction

from . import _core
from ._core import (
    __version__,
    a_sequence,
    canonical_basis,
    decomposition_matrix_json,
    flotw_multipartitions,
    is_flotw,
    multipartitions,
    residue,
)


def a_value(mp, e, v):
    """Exact a-value of a multipartition as a Fraction."""
    num, den = _core.a_value(mp, e, v)
    return _Fraction(num, den)


def decomposition_matrix(n, e, v, q_mode=False):
    """Decomposition matrix as a dict following the json schema.

    Keys: ``e``, ``d``, ``v``, ``n``, ``rows`` (all multipartitions of rank
    n) and ``columns`` (one dict per canonical basis element with ``label``
    and its nonzero ``entries``). With ``q_mode`` the entry values are
    ``[[exponent, coefficient], ...]`` lists instead of integers.
    """
    return _json.loads(decomposition_matrix_json(n, e, v, q_mode))


__all__ = [
    "__version__",
    "a_sequence",
    "a_value",
    "canonical_basis",
    "decomposition_matrix",
    "decomposition_matrix_json",
    "flotw_multipartitions",
    "is_flotw",
    "multipartitions",
    "residue",
]
