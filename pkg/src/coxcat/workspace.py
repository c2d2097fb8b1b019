"""Cached bundle of the structures attached to one Coxeter system."""

from __future__ import annotations

from functools import cached_property, lru_cache

from .cluster import ClusterComplex
from .coxeter import CoxeterSystem, GroupElement, Parabolic, build_system
from .flats import IntersectionLattice
from .noncross import NCLattice


class Workspace:
    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._complexes: dict[int, ClusterComplex] = {}
        self._subs: dict[tuple[int, ...], tuple["Workspace", Parabolic]] = {}

    @cached_property
    def lattice(self) -> IntersectionLattice:
        return IntersectionLattice(self.system)

    @cached_property
    def nc(self) -> NCLattice:
        return NCLattice(self.system, self.lattice)

    def complex(self, m: int) -> ClusterComplex:
        if m not in self._complexes:
            self._complexes[m] = ClusterComplex(self.nc, m)
        return self._complexes[m]

    @property
    def orbits(self):
        return self.lattice.orbits

    def sub(self, J) -> tuple["Workspace", Parabolic]:
        """Workspace of the standard parabolic ``W_J`` and its embedding."""
        J = tuple(sorted(J))
        if J not in self._subs:
            par = self.system.parabolic(J)
            self._subs[J] = (Workspace(par.system), par)
        return self._subs[J]

    def maximal_parabolics(self) -> list[tuple[int, "Workspace", Parabolic]]:
        n = self.system.rank
        out = []
        for s in range(n):
            ws, par = self.sub([i for i in range(n) if i != s])
            out.append((s, ws, par))
        return out

    def ambient_orbits(self, J) -> list[int]:
        """For each orbit of ``W_J``, the orbit of ``W`` containing it."""
        ws, par = self.sub(J)
        return [self.lattice.orbit_of(par.embed(ws.nc.orbit_representative(o.index)))
                for o in ws.orbits]

    def orbit_of(self, w: GroupElement) -> int:
        return self.lattice.orbit_of(w)


@lru_cache(maxsize=None)
def load(type_string: str) -> Workspace:
    """Cached workspace for a type string such as ``"B3"``."""
    return Workspace(build_system(type_string))
