"""Length-additive reflection factorisations of a Coxeter element.

A factorisation of type ``X`` is ``c = w t_1 ... t_k`` with ``w`` in the
parabolic class of ``X``, ``k = dim X`` and reflection lengths adding up.
The statistic ``nil`` counts the prefixes ``w t_1 ... t_i`` whose Coxeter
length drops.
"""

from __future__ import annotations

import math
from collections import Counter

from .coxeter import GroupElement
from .noncross import NCLattice
from .scalars import UniPoly


def factorizations(nc: NCLattice, orbit: int) -> list[tuple[GroupElement, tuple[int, ...]]]:
    """All ``(w, (t_1, ..., t_k))`` with ``c = w t_1 ... t_k`` and ``w`` in the class ``orbit``.

    Reflections are positive-root indices.
    """
    W = nc.system
    k = nc.lattice.orbits[orbit].dim
    out = []

    def descend(x: GroupElement, tail: tuple[int, ...]):
        if len(tail) == k:
            if nc.item(x).orbit == orbit:
                out.append((x, tail))
            return
        lx = nc.item(x).length
        for a, t in enumerate(W.reflections):
            y = x * t
            rec = nc.index.get(y)
            if rec is not None and nc.items[rec].length == lx - 1:
                descend(y, (a,) + tail)

    descend(nc.c, ())
    return out


def nil(nc: NCLattice, w: GroupElement, factors: tuple[int, ...]) -> int:
    W = nc.system
    count = 0
    x = w
    for a in factors:
        y = x * W.reflections[a]
        if W.length(y) < W.length(x):
            count += 1
        x = y
    return count


def phi(nc: NCLattice, orbit: int) -> UniPoly:
    """``φ(W, X, q) = sum over factorisations of q^nil``."""
    counts = Counter(nil(nc, w, ts) for w, ts in factorizations(nc, orbit))
    top = max(counts) if counts else -1
    return UniPoly([counts.get(i, 0) for i in range(top + 1)], "q")


def phi_closed_form(lattice, orbit: int) -> UniPoly:
    """``k!/[N:W_X] * prod(b_i + 1 + q(h - b_i - 1))`` over the exponents ``b_i`` of ``X``."""
    h = lattice.system.coxeter_number()
    k = lattice.orbits[orbit].dim
    q = UniPoly.variable("q")
    out = UniPoly.constant(math.factorial(k), "q")
    for b in lattice.os_exponents(orbit):
        out = out * (q * (h - b - 1) + (b + 1))
    return out / lattice.normalizer_index(orbit)


def phi_from_gamma(gamma_poly: UniPoly, k: int) -> UniPoly:
    """``k! (1-q)^k γ(q/(1-q))`` for a polynomial ``γ`` in ``m`` of degree at most ``k``."""
    if gamma_poly.degree > k:
        raise ValueError("γ has degree above k")
    q = UniPoly.variable("q")
    out = UniPoly((), "q")
    for j, g in enumerate(gamma_poly.coeffs):
        out = out + g * q ** j * (1 - q) ** (k - j)
    return out * math.factorial(k)


def right_inversions(nc: NCLattice) -> list[int]:
    """Reflections ``t`` with ``c t`` shorter than ``c``."""
    W = nc.system
    lc = W.length(nc.c)
    return [a for a, t in enumerate(W.reflections) if W.length(nc.c * t) < lc]


def right_inversion_map(nc: NCLattice) -> dict[int, int]:
    """Right inversion ``t`` of ``c`` to the simple index ``s`` with ``c t`` in ``W_(s)``."""
    W = nc.system
    full = set(range(W.rank))
    out = {}
    for a in right_inversions(nc):
        missing = full - W.support(nc.c * W.reflections[a])
        if len(missing) != 1:
            raise ArithmeticError("c t is not in a maximal standard parabolic")
        out[a] = missing.pop()
    return out


def conjugation_orbits(nc: NCLattice) -> list[list[int]]:
    """Orbits of conjugation by ``c`` on the reflections."""
    W = nc.system
    seen, out = set(), []
    for a in range(W.num_positive):
        if a in seen:
            continue
        orb = [a]
        seen.add(a)
        while True:
            b = W.conjugate_reflection(nc.c, orb[-1])
            if b == a:
                break
            orb.append(b)
            seen.add(b)
        out.append(orb)
    return out


def steinberg_census(nc: NCLattice) -> bool:
    """Each conjugation orbit holds one right inversion and has size h/2, or two and size h."""
    h = nc.system.coxeter_number()
    inv = set(right_inversions(nc))
    for orb in conjugation_orbits(nc):
        k = len(inv.intersection(orb))
        if (k, len(orb) * 2) not in ((1, h), (2, 2 * h)):
            return False
    return sorted(right_inversion_map(nc).values()) == list(range(nc.system.rank))
