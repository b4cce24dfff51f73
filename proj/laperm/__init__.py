"""Exact Laplacian permanents of graphs.

Thin Python layer over the C++ core: exact permanents (Ryser / tree
recurrence), named graph families, edge-grafting transforms, tree and
bipartite-unicyclic enumeration, closed-form evaluation, and verification
of extremal orderings. All values are exact Python ints.
"""

import json as _json

from ._laperm import (
    Graph,
    LapermError,
    apply_lemma35,
    apply_op1,
    apply_op2,
    apply_op3,
    build_family,
    canonical_form,
    char_poly,
    dominance_compare,
    enumerate_class,
    eval_formula,
    is_isomorphic,
    laplacian_permanent,
    lemma34_gap,
    normalize_family,
    pell_q,
    pell_s,
    rank_by_permanent,
    recognize_family,
    spanning_tree_count,
)
from ._laperm import verify_theorem as _verify_theorem_raw


def verify_theorem(theorem, n):
    """Run one verification branch and return the report as a dict."""
    return _json.loads(_verify_theorem_raw(theorem, n))


def cli_path():
    """Path to the bundled command-line binary, when installed as a wheel."""
    import os

    path = os.path.join(os.path.dirname(__file__), "bin", "laperm")
    return path if os.path.exists(path) else None


__all__ = [
    "Graph",
    "LapermError",
    "apply_lemma35",
    "apply_op1",
    "apply_op2",
    "apply_op3",
    "build_family",
    "canonical_form",
    "char_poly",
    "cli_path",
    "dominance_compare",
    "enumerate_class",
    "eval_formula",
    "is_isomorphic",
    "laplacian_permanent",
    "lemma34_gap",
    "normalize_family",
    "pell_q",
    "pell_s",
    "rank_by_permanent",
    "recognize_family",
    "spanning_tree_count",
    "verify_theorem",
]
