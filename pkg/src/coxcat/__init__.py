"""Exact Fuss-Catalan enumeration for finite real reflection groups.

Builds a Coxeter system from a type string, its lattice of flats, the
noncrossing partitions of a bipartite Coxeter element and the generalised
cluster complex, and compares their refined counts.

>>> from coxcat import load
>>> ws = load("A2")
>>> ws.complex(1).facets(), ws.complex(1).facets(plus=True)
(5, 2)
"""

from __future__ import annotations

from .coxeter import CoxeterSystem, CoxeterType, GroupElement, TypeParseError, build_system, parse_type
from .cluster import ClusterComplex
from .flats import IntersectionLattice
from .noncross import NCLattice, catalan_number, fuss_catalan
from .scalars import AlgebraicScalar, NumberField, UniPoly
from .workspace import Workspace, load

__all__ = [
    "AlgebraicScalar",
    "ClusterComplex",
    "CoxeterSystem",
    "CoxeterType",
    "GroupElement",
    "IntersectionLattice",
    "NCLattice",
    "NumberField",
    "TypeParseError",
    "UniPoly",
    "Workspace",
    "build_system",
    "catalan_number",
    "fuss_catalan",
    "load",
    "parse_type",
]
