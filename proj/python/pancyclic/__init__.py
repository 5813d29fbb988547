"""Cycle certificates through edges of derangement, fixed-point and arrangement graphs.

Tuples are 1-based lists, e.g. ``[2, 1, 4, 3]``. Specs are strings such as
``"gamma:5"``, ``"gammak:5:1"`` or ``"arr:6:4"``.
"""

from ._pancyclic import (
    ConstructionFailed,
    InvalidArgument,
    LengthOutOfRange,
    PancyclicError,
    brute_force,
    construct,
    construct_json,
    dense_cycle,
    derangement_count,
    eta_order,
    factorial,
    graph_degree,
    graph_order,
    is_adjacent,
    sweep,
    verify,
)

__all__ = [
    "ConstructionFailed",
    "InvalidArgument",
    "LengthOutOfRange",
    "PancyclicError",
    "brute_force",
    "construct",
    "construct_json",
    "dense_cycle",
    "derangement_count",
    "eta_order",
    "factorial",
    "graph_degree",
    "graph_order",
    "is_adjacent",
    "sweep",
    "verify",
]
