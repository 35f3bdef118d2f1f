"""Exact computations for irreversible algebraic dynamical systems.

The heavy lifting lives in the C++ extension; this package re-exports the
system loader and the value types.
"""

from ._core import (
    AlgebraElement,
    Coset,
    DiagonalElement,
    GroupElement,
    InfiniteIndexError,
    NeedsUnitPError,
    ParseError,
    PElement,
    System,
    load_system,
)

__all__ = [
    "AlgebraElement",
    "Coset",
    "DiagonalElement",
    "GroupElement",
    "InfiniteIndexError",
    "NeedsUnitPError",
    "ParseError",
    "PElement",
    "System",
    "load_system",
]
