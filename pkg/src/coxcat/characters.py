"""Class functions constant on parabolic classes and the parking characters.

A :class:`ClassFunction` stores one value per orbit of flats, read at a
representative ``w`` with ``Fix(w)`` in that orbit.  Values may be
rationals or polynomials.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from .coxeter import GroupElement
from .linalg import inverse, rank
from .scalars import UniPoly
from .workspace import Workspace


class ClassFunction:
    __slots__ = ("table", "values")

    def __init__(self, table: "CharacterTable", values: Sequence):
        self.table = table
        self.values = list(values)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.table, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.table, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        """Tensor product (pointwise) or scaling."""
        if isinstance(other, ClassFunction):
            return ClassFunction(self.table, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.table, [a * other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.values == other.values

    def __repr__(self):
        return f"ClassFunction({self.values})"

    def evaluate(self, x) -> "ClassFunction":
        return ClassFunction(self.table, [v(x) if isinstance(v, UniPoly) else v for v in self.values])


class CharacterTable:
    """Parabolic characters of one workspace, evaluated on orbit representatives."""

    def __init__(self, ws: Workspace):
        self.ws = ws
        self.system = ws.system
        self.lattice = ws.lattice
        self.reps = [ws.nc.orbit_representative(o.index) for o in self.lattice.orbits]
        self._phi: dict[int, ClassFunction] = {}

    def __len__(self):
        return len(self.reps)

    def function(self, f: Callable[[GroupElement], object]) -> ClassFunction:
        return ClassFunction(self, [f(w) for w in self.reps])

    def zero(self) -> ClassFunction:
        return ClassFunction(self, [Fraction(0)] * len(self))

    @cached_property
    def class_sizes(self) -> list[int]:
        sizes = [0] * len(self)
        for w in self.system.elements:
            sizes[self.lattice.orbit_of(w)] += 1
        return sizes

    @cached_property
    def _inverses(self) -> list[GroupElement]:
        return [~y for y in self.system.elements]

    def phi(self, orbit: int) -> ClassFunction:
        """``Φ_X(w)``: number of cosets ``y W_X`` with ``y^-1 w y`` in ``W_X``."""
        if orbit not in self._phi:
            self._phi[orbit] = self._phi_by_cosets(orbit)
        return self._phi[orbit]

    def _phi_by_cosets(self, orbit: int) -> ClassFunction:
        W, lat = self.system, self.lattice
        x = lat.orbits[orbit].representative
        refl_x = lat.flats[x].reflections
        size = lat.parabolic_order(x)
        values = []
        for w in self.reps:
            fw = W.fix_reflections(w)
            hits = 0
            for yi in self._inverses:
                if all(W.conjugate_reflection(yi, k) in refl_x for k in fw):
                    hits += 1
            values.append(Fraction(hits, size))
        return ClassFunction(self, values)

    def phi_by_flats(self, orbit: int) -> ClassFunction:
        """``Φ_X(w) = [N(W_X):W_X] * #{Y ~ X : Y inside Fix(w)}``."""
        W, lat = self.system, self.lattice
        members = lat.orbits[orbit].members
        index = lat.normalizer_index(orbit)
        values = []
        for w in self.reps:
            fw = W.fix_reflections(w)
            values.append(Fraction(index * sum(1 for y in members if fw <= lat.flats[y].reflections)))
        return ClassFunction(self, values)

    @cached_property
    def marks(self) -> list[list[Fraction]]:
        """``marks[Y][X] = Φ_X(w_Y)``; lower triangular in the orbit order."""
        cols = [self.phi(o.index).values for o in self.lattice.orbits]
        return [[cols[x][y] for x in range(len(self))] for y in range(len(self))]

    @cached_property
    def _marks_inverse(self) -> list[list[Fraction]]:
        return inverse(self.marks)

    def coefficients(self, f: ClassFunction) -> list:
        """Coordinates of ``f`` in the basis ``Φ_X``."""
        inv = self._marks_inverse
        return [sum((a * v for a, v in zip(row, f.values)), 0) for row in inv]

    def combination(self, coeffs: Sequence) -> ClassFunction:
        out = None
        for o, c in zip(self.lattice.orbits, coeffs):
            term = self.phi(o.index) * c
            out = term if out is None else out + term
        return out

    def psi(self, t=None) -> ClassFunction:
        """``Ψ_t(w) = t^dim Fix(w)``; polynomial in ``t`` when ``t`` is None."""
        var = UniPoly.variable("t") if t is None else t
        return ClassFunction(self, [var ** self.lattice.orbits[i].dim for i in range(len(self))])

    def sign(self) -> ClassFunction:
        return ClassFunction(self, [(-1) ** self.system.length(w) for w in self.reps])

    def trivial(self) -> ClassFunction:
        return ClassFunction(self, [1] * len(self))

    def trivial_multiplicity(self, f: ClassFunction):
        total = sum(s * v for s, v in zip(self.class_sizes, f.values))
        return total / self.system.order

    def inner(self, f: ClassFunction, g: ClassFunction):
        """``<f, g>`` for real-valued class functions."""
        total = sum(s * a * b for s, a, b in zip(self.class_sizes, f.values, g.values))
        return total / self.system.order

    # -- parking characters --------------------------------------------------------

    def park(self, m: int, plus: bool = False) -> ClassFunction:
        """Combinatorial parking character ``sum_X κ(W,X,m) Φ_X`` (``κ+`` with ``plus``)."""
        return self.combination(self.ws.nc.kappa(m, plus))

    def park_from_matrices(self, m: int, plus: bool = False) -> ClassFunction:
        nc = self.ws.nc
        return self.combination(nc.park_plus_vector(m) if plus else nc.park_vector(m))

    def park_abstract(self, m: int, plus: bool = False) -> ClassFunction:
        """``prod (m h_i +- 1)^dim Z_i`` over the factors of ``W`` and of ``Fix(w)``."""
        W = self.system
        hs = W.component_coxeter_numbers()
        shift = -1 if plus else 1
        values = []
        for w in self.reps:
            fw = W.fix_reflections(w)
            val = 1
            for comp, h in zip(W.components, hs):
                comp_set = set(comp)
                inside = [W.roots[k] for k in fw if W.root_support(k) <= comp_set]
                val *= (m * h + shift) ** (len(comp) - rank(inside))
            values.append(Fraction(val))
        return ClassFunction(self, values)

    def park_at_negative(self, m: int) -> ClassFunction:
        """``park_(W,-m)`` from the κ polynomials."""
        nc = self.ws.nc
        return self.combination([nc.kappa_poly(o.index)(-m) for o in self.lattice.orbits])

    # -- induction -----------------------------------------------------------------------

    def induce(self, J, f: ClassFunction) -> ClassFunction:
        """Induce a class function of the standard parabolic ``W_J`` to ``W``."""
        W = self.system
        sub, par = self.ws.sub(J)
        sub_lat = sub.lattice
        inside = self.lattice.flats[self.lattice.standard_flat(J)].reflections
        order = sub.system.order
        values = []
        for w in self.reps:
            total = 0
            for y, yi in zip(W.elements, self._inverses):
                u = yi * w * y
                if W.fix_reflections(u) <= inside:
                    total = total + f.values[sub_lat.orbit_of(par.restrict(u))]
            values.append(Fraction(total, order) if isinstance(total, int) else total / order)
        return ClassFunction(self, values)

    def sub_table(self, J) -> "CharacterTable":
        sub, _ = self.ws.sub(J)
        return table_for(sub)


def table_for(ws: Workspace) -> CharacterTable:
    """The character table of a workspace, built once."""
    table = ws.__dict__.get("_character_table")
    if table is None:
        table = ws.__dict__["_character_table"] = CharacterTable(ws)
    return table


def subsets(n: int):
    for r in range(n + 1):
        yield from itertools.combinations(range(n), r)


def solomon_sides(table: CharacterTable, J) -> tuple[ClassFunction, ClassFunction]:
    """``ε ⊗ Φ_J`` and ``sum over I in J of (-1)^|I| Φ_I``."""
    lat = table.lattice
    lhs = table.sign() * table.phi(lat.flat_orbit[lat.standard_flat(J)])
    rhs = table.zero()
    for r in range(len(J) + 1):
        for I in itertools.combinations(J, r):
            rhs = rhs + table.phi(lat.flat_orbit[lat.standard_flat(I)]) * (-1) ** r
    return lhs, rhs


def inclusion_exclusion_sides(table: CharacterTable, m: int, plus: bool = False):
    """``park = sum_I ind park'_(W_I)`` or ``park' = sum_I (-1)^(n-|I|) ind park_(W_I)``."""
    n = table.system.rank
    rhs = table.zero()
    for I in subsets(n):
        sub = table.sub_table(I)
        if plus:
            rhs = rhs + table.induce(I, sub.park(m)) * (-1) ** (n - len(I))
        else:
            rhs = rhs + table.induce(I, sub.park(m, plus=True))
    return table.park(m, plus), rhs
