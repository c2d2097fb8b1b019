"""Intersection lattice of a reflection arrangement and its orbit data.

A flat ``X`` is stored as the set of reflections whose hyperplanes contain
it, i.e. the reflections of the parabolic subgroup ``W_X``.  The lattice is
ordered by reverse inclusion of subspaces, which is inclusion of these
reflection sets: the whole space ``V`` is the bottom, the origin the top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .coxeter import CoxeterSystem, CoxeterType, GroupElement, classify
from .linalg import Echelon
from .scalars import UniPoly


@dataclass(frozen=True)
class Flat:
    reflections: frozenset[int]
    dim: int


@dataclass
class FlatOrbit:
    """A W-orbit of flats, equivalently a parabolic conjugacy class."""

    index: int
    key: tuple[int, ...]
    dim: int
    members: list[int]
    label: str = ""
    parabolic_type: CoxeterType | None = None
    extra: dict = field(default_factory=dict, repr=False)

    @property
    def representative(self) -> int:
        return self.members[0]


class IntersectionLattice:
    """Flats ``Fix(w)`` of a Coxeter system, their Mobius function and orbits."""

    def __init__(self, system: CoxeterSystem):
        self.system = W = system
        found: dict[frozenset[int], int] = {}
        self._element_flat: dict[GroupElement, int] = {}
        flats: list[Flat] = []
        for w in W.elements:
            refl = W.fix_reflections(w)
            if refl not in found:
                found[refl] = len(flats)
                flats.append(Flat(refl, W.fix_dim(w)))
            self._element_flat[w] = found[refl]
        # canonical order: by number of reflections, then sorted tuple
        order = sorted(range(len(flats)), key=lambda i: (len(flats[i].reflections), sorted(flats[i].reflections)))
        self.flats = [flats[i] for i in order]
        self.flat_index = {f.reflections: i for i, f in enumerate(self.flats)}
        self._element_flat = {w: self.flat_index[flats[i].reflections] for w, i in self._element_flat.items()}
        self._mobius: dict[int, dict[int, int]] = {}
        self._build_orbits()

    # -- flats ---------------------------------------------------------------

    def flat_of(self, w: GroupElement) -> int:
        got = self._element_flat.get(w)
        if got is None:
            got = self.flat_index[self.system.fix_reflections(w)]
        return got

    def orbit_of(self, w: GroupElement) -> int:
        return self.flat_orbit[self.flat_of(w)]

    @property
    def bottom(self) -> int:
        """The whole space V (no reflections)."""
        return self.flat_index[frozenset()]

    @property
    def top(self) -> int:
        """The origin (all reflections)."""
        return self.flat_index[frozenset(range(self.system.num_positive))]

    def leq(self, x: int, y: int) -> bool:
        """``x <= y`` in reverse inclusion, i.e. ``y`` is a subspace of ``x``."""
        return self.flats[x].reflections <= self.flats[y].reflections

    def upper(self, x: int) -> list[int]:
        rx = self.flats[x].reflections
        return [y for y, f in enumerate(self.flats) if rx <= f.reflections]

    def interval(self, x: int, z: int) -> list[int]:
        """Flats ``y`` with ``x <= y <= z``."""
        rx, rz = self.flats[x].reflections, self.flats[z].reflections
        return [y for y, f in enumerate(self.flats) if rx <= f.reflections <= rz]

    def act(self, w: GroupElement, x: int) -> int:
        W = self.system
        return self.flat_index[frozenset(W.conjugate_reflection(w, k) for k in self.flats[x].reflections)]

    def mobius(self, x: int, y: int) -> int:
        row = self._mobius.get(x)
        if row is None:
            row = {}
            ups = sorted(self.upper(x), key=lambda i: len(self.flats[i].reflections))
            for y2 in ups:
                if y2 == x:
                    row[y2] = 1
                    continue
                r2 = self.flats[y2].reflections
                row[y2] = -sum(v for z, v in row.items() if self.flats[z].reflections < r2)
            self._mobius[x] = row
        return row.get(y, 0)

    def char_poly(self, x: int) -> UniPoly:
        """``p_X(t) = sum over Y >= X of mu(X, Y) t^dim(Y)``."""
        p = UniPoly((), "t")
        t = UniPoly.variable("t")
        for y in self.upper(x):
            p = p + self.mobius(x, y) * t ** self.flats[y].dim
        return p

    def parabolic_simples(self, x: int) -> list[int]:
        """Simple system of ``W_X`` as positive-root indices."""
        W = self.system
        refl = self.flats[x].reflections
        out = []
        for a in sorted(refl):
            t = W.reflections[a]
            if all(t.perm[b] < W.num_positive for b in refl if b != a):
                out.append(a)
        return out

    def parabolic_components(self, x: int) -> list[tuple[list[int], frozenset[int]]]:
        """Irreducible factors of ``W_X``: (simple roots, reflections) pairs."""
        W = self.system
        simples = self.parabolic_simples(x)
        left = list(simples)
        comps = []
        while left:
            comp = [left.pop(0)]
            grew = True
            while grew:
                grew = False
                for a in list(left):
                    ta = W.reflections[a]
                    if any(ta * W.reflections[b] != W.reflections[b] * ta for b in comp):
                        comp.append(a)
                        left.remove(a)
                        grew = True
            refl = set(comp)
            frontier = list(comp)
            while frontier:
                nxt = []
                for r in frontier:
                    for a in comp:
                        s = W.positive_part(W.reflections[a].perm[r])
                        if s not in refl:
                            refl.add(s)
                            nxt.append(s)
                frontier = nxt
            comps.append((sorted(comp), frozenset(refl)))
        return comps

    def parabolic_type(self, x: int) -> CoxeterType:
        W = self.system
        simples = self.parabolic_simples(x)
        m = [[W.element_order(W.reflections[a] * W.reflections[b]) for b in simples] for a in simples]
        return classify(m)

    def parabolic_order(self, x: int) -> int:
        refl = self.flats[x].reflections
        return sum(1 for w, f in self._element_flat.items() if self.flats[f].reflections <= refl)

    def coxeter_numbers_multiset(self, x: int, z: int) -> list[int]:
        """Coxeter numbers ``h_i(X, Z)`` for subspaces ``X`` contained in ``Z``.

        Each irreducible factor of ``W_X`` contributes its Coxeter number
        with multiplicity the dimension of the matching factor of ``Z``.
        """
        W = self.system
        rz = self.flats[z].reflections
        if not rz <= self.flats[x].reflections:
            raise ValueError("X must be a subspace of Z")
        out = []
        for simples, refl in self.parabolic_components(x):
            h = 2 * len(refl) // len(simples)
            inner = Echelon([W.roots[k] for k in rz & refl]).rank
            out.extend([h] * (len(simples) - inner))
        return sorted(out)

    # -- orbits ----------------------------------------------------------------

    def _build_orbits(self) -> None:
        W = self.system
        gens = W.simple_reflections
        seen: dict[int, int] = {}
        raw = []
        for x in range(len(self.flats)):
            if x in seen:
                continue
            members, stack = {x}, [x]
            while stack:
                y = stack.pop()
                for s in gens:
                    z = self.act(s, y)
                    if z not in members:
                        members.add(z)
                        stack.append(z)
            for y in members:
                seen[y] = len(raw)
            raw.append(members)
        orbits = []
        for members in raw:
            ordered = sorted(members, key=lambda y: sorted(self.flats[y].reflections))
            key = tuple(sorted(self.flats[ordered[0]].reflections))
            orbits.append(FlatOrbit(0, key, self.flats[ordered[0]].dim, ordered))
        orbits.sort(key=lambda o: (o.dim, o.key))
        for i, o in enumerate(orbits):
            o.index = i
            o.parabolic_type = self.parabolic_type(o.representative)
        counts: dict[str, int] = {}
        for o in orbits:
            counts[str(o.parabolic_type)] = counts.get(str(o.parabolic_type), 0) + 1
        seen_names: dict[str, int] = {}
        for o in orbits:
            name = str(o.parabolic_type)
            if counts[name] > 1:
                seen_names[name] = seen_names.get(name, 0) + 1
                name = f"{name}#{seen_names[name]}"
            o.label = name
        self.orbits = orbits
        self.flat_orbit = {y: o.index for o in orbits for y in o.members}

    def orbit_by_label(self, label: str) -> FlatOrbit:
        for o in self.orbits:
            if o.label == label:
                return o
        raise KeyError(label)

    def orbit_char_poly(self, i: int) -> UniPoly:
        o = self.orbits[i]
        if "p" not in o.extra:
            o.extra["p"] = self.char_poly(o.representative)
        return o.extra["p"]

    def os_exponents(self, i: int) -> list[int]:
        """Orlik-Solomon exponents of an orbit: the roots of ``p_X``."""
        return self.orbit_char_poly(i).integer_roots()

    def normalizer_index(self, i: int) -> int:
        """``[N(W_X) : W_X]`` via orbit-stabiliser."""
        o = self.orbits[i]
        if "ni" not in o.extra:
            stab = len(self.system.elements) // len(o.members)
            o.extra["ni"] = stab // self.parabolic_order(o.representative)
        return o.extra["ni"]

    @cached_property
    def _nu(self) -> list[int]:
        W = self.system
        counts = [0] * len(self.orbits)
        for r in range(W.rank + 1):
            for J in itertools.combinations(range(W.rank), r):
                counts[self.flat_orbit[self.standard_flat(J)]] += 1
        return counts

    def nu(self, i: int) -> int:
        """Number of subsets J of S with ``W_J`` in the class of orbit ``i``."""
        return self._nu[i]

    def standard_flat(self, J) -> int:
        W = self.system
        Js = set(J)
        return self.flat_index[frozenset(k for k in range(W.num_positive) if W.root_support(k) <= Js)]

    def regions(self, i: int) -> Fraction:
        """Number of regions of the restricted arrangement ``(-1)^dim p_X(-1)``."""
        o = self.orbits[i]
        return (-1) ** o.dim * self.orbit_char_poly(i)(-1)

    def exponents(self) -> list[int]:
        return self.os_exponents(self.flat_orbit[self.bottom])

    def orbit_table(self) -> list[dict]:
        """Per-orbit summary used by the tables output and product checks."""
        return [
            {
                "label": o.label,
                "dim": o.dim,
                "coxeter_type": str(o.parabolic_type),
                "char_poly": self.orbit_char_poly(o.index),
                "os_exponents": self.os_exponents(o.index),
                "normalizer_index": self.normalizer_index(o.index),
                "nu": self.nu(o.index),
                "size": len(o.members),
            }
            for o in self.orbits
        ]


def exponent_levels(lattice: IntersectionLattice) -> list[int]:
    """Level of each exponent: least k with the exponent in every ``p_X``, ``dim X >= k``."""
    out = []
    for e in lattice.exponents():
        level = None
        for k in range(lattice.system.rank, 0, -1):
            if all(e in lattice.os_exponents(o.index) for o in lattice.orbits if o.dim >= k):
                level = k
            else:
                break
        out.append(level)
    return out


def laplacian_sides(lattice: IntersectionLattice, x: int, z: int) -> tuple[UniPoly, UniPoly]:
    """Both sides of ``prod(h_i(X,Z) + t) = sum_Y prod h_i(Y,Z) t^(dim Y - dim X)``.

    ``x`` and ``z`` are flats with ``X`` a subspace of ``Z``.
    """
    t = UniPoly.variable("t")
    lhs = UniPoly.constant(1, "t")
    for h in lattice.coxeter_numbers_multiset(x, z):
        lhs = lhs * (t + h)
    rhs = UniPoly((), "t")
    dx = lattice.flats[x].dim
    for y in lattice.interval(z, x):
        coeff = 1
        for h in lattice.coxeter_numbers_multiset(y, z):
            coeff *= h
        rhs = rhs + coeff * t ** (lattice.flats[y].dim - dx)
    return lhs, rhs


def regions_sides(lattice: IntersectionLattice, z: int) -> tuple[UniPoly, UniPoly]:
    """Both sides of ``(mh+1)^dim Z = sum_X r(A^X) prod(m h_i(X,Z) - 1)`` as polynomials in m."""
    W = lattice.system
    h = W.coxeter_number()
    m = UniPoly.variable("m")
    lhs = (m * h + 1) ** lattice.flats[z].dim
    rhs = UniPoly((), "m")
    for x in lattice.interval(z, lattice.top):
        i = lattice.flat_orbit[x]
        term = UniPoly.constant(lattice.nu(i) * lattice.normalizer_index(i), "m")
        for hi in lattice.coxeter_numbers_multiset(x, z):
            term = term * (m * hi - 1)
        rhs = rhs + term
    return lhs, rhs


def product_combine(table1: list[dict], table2: list[dict]) -> list[dict]:
    """Orbit table of ``W1 x W2`` from the tables of the factors."""
    out = []
    for a in table1:
        for b in table2:
            out.append({
                "label": f"{a['label']}|{b['label']}",
                "dim": a["dim"] + b["dim"],
                "char_poly": a["char_poly"] * b["char_poly"],
                "os_exponents": sorted(a["os_exponents"] + b["os_exponents"]),
                "normalizer_index": a["normalizer_index"] * b["normalizer_index"],
                "nu": a["nu"] * b["nu"],
                "size": a["size"] * b["size"],
            })
    return out
