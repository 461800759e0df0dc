"""Finite unit-ball packings on the hexagonal close packed lattice."""

from .hexlattice import HexCoord, Window, is_contact, neighbors, pair_form, to_cartesian
from .packing import Configuration, ContactGraph, build_contact_graph, canonicalize, contact_count

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "ContactGraph",
    "HexCoord",
    "Window",
    "build_contact_graph",
    "canonicalize",
    "contact_count",
    "is_contact",
    "neighbors",
    "pair_form",
    "to_cartesian",
]
