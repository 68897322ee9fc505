"""Nominal unification over first-order terms with binders."""

from ._nomunify import (
    ParseError,
    Term,
    alpha_eq,
    disagreement_set,
    fresh,
    ground_alpha_eq,
    parse_term,
    permute,
    permute_atom,
    solve,
    solve_json,
    weak_eq,
)

__all__ = [
    "ParseError",
    "Term",
    "alpha_eq",
    "disagreement_set",
    "fresh",
    "ground_alpha_eq",
    "parse_term",
    "permute",
    "permute_atom",
    "solve",
    "solve_json",
    "weak_eq",
]
