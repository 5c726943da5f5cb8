"""Auslander-Reiten quivers of type A, their reduced words and duality data."""
from .arquiver import ARQuiver, Coord, build, build_coxeter, build_hooks, pairs_of, rays
from .rootsys import DynkinQuiverA, Segment, parse_quiver, root

__all__ = [
    "ARQuiver",
    "Coord",
    "DynkinQuiverA",
    "Segment",
    "build",
    "build_coxeter",
    "build_hooks",
    "pairs_of",
    "parse_quiver",
    "rays",
    "root",
]
