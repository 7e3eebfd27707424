"""Python bindings for the cds/gcds game toolkit.

Graphs are plain dicts ``{"vertices": [...], "edges": [[a, b], ...]}`` with
string labels; permutations are lists of ints.
"""

from ._cdsgame import (
    BoundExceeded,
    NotAnEdge,
    NotApplicable,
    ParseError,
    StateError,
    apply_cds,
    are_isomorphic,
    gcds,
    gcds2,
    gen_alpha,
    gen_chain,
    gen_favorable,
    is_fixed_point,
    is_sortable,
    legal_moves,
    np_status,
    overlap_graph,
    run_cli,
    solve_cds,
    solve_gcds,
    strategic_pile,
    suite_names,
    verify_suite,
)

__all__ = [
    "BoundExceeded",
    "NotAnEdge",
    "NotApplicable",
    "ParseError",
    "StateError",
    "apply_cds",
    "are_isomorphic",
    "gcds",
    "gcds2",
    "gen_alpha",
    "gen_chain",
    "gen_favorable",
    "is_fixed_point",
    "is_sortable",
    "legal_moves",
    "np_status",
    "overlap_graph",
    "run_cli",
    "solve_cds",
    "solve_gcds",
    "strategic_pile",
    "suite_names",
    "verify_suite",
]
