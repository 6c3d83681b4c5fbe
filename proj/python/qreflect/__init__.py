"""Exact quiver mutation, mutated reflections, and exchange-graph verification.

Vertex labels are 1-based, matrices are nested lists of ints, orderings are
lists of labels in ascending order (``[1, 3, 2]`` means 1 < 3 < 2).
"""

from ._qreflect import (
    BudgetError,
    InvariantError,
    OverflowError,
    Quiver,
    an_membership,
    apply_sequence,
    bfs_verify,
    build_ordering,
    enumerate_valid_orderings,
    fuzz,
    gim,
    load_quiver,
    mutate,
    ordering_valid,
    reflections,
    stable_walk,
    swap_effect,
    swap_lemma_forms,
    validate_type_an,
)

__all__ = [
    "BudgetError",
    "InvariantError",
    "OverflowError",
    "Quiver",
    "an_membership",
    "apply_sequence",
    "bfs_verify",
    "build_ordering",
    "enumerate_valid_orderings",
    "fuzz",
    "gim",
    "load_quiver",
    "mutate",
    "ordering_valid",
    "reflections",
    "stable_walk",
    "swap_effect",
    "swap_lemma_forms",
    "validate_type_an",
]
