"""Deformed Hall-Littlewood fusion rings: nodes, Pieri coefficients, structure constants."""

from ._core import (
    alcove,
    datum,
    fusion_ring,
    nodes,
    pieri,
    structure_constants,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "alcove",
    "datum",
    "fusion_ring",
    "nodes",
    "pieri",
    "structure_constants",
    "verify",
]
