"""Generating functions of statistics over pattern-avoiding involutions and permutations."""

import json

from ._core import (
    CapExceeded,
    Permutation,
    Poly,
    bijection,
    bijection_names,
    conjecture_ids,
    formula,
    formula_ids,
    genfun,
    members,
    q_binomial,
    reverse_in_q,
)
from . import _core


def verify(scope="all", n_inv=12, n_perm=8, m_fpf=6, n_parity=13, jobs=0):
    """Run the verification report; returns the parsed JSON document."""
    return json.loads(_core._verify(scope, n_inv, n_perm, m_fpf, n_parity, jobs))


def verify_bijection(name, n):
    return json.loads(_core._verify_bijection(name, n))


def conjecture(id, max_len=4, n_max=-1, m_max=8, k_max=3, jobs=0):
    return json.loads(_core._conjecture(id, max_len, n_max, m_max, k_max, jobs))


__all__ = [
    "CapExceeded",
    "Permutation",
    "Poly",
    "bijection",
    "bijection_names",
    "conjecture",
    "conjecture_ids",
    "formula",
    "formula_ids",
    "genfun",
    "members",
    "q_binomial",
    "reverse_in_q",
    "verify",
    "verify_bijection",
]
