"""Noncrossing partitions NC(W, c), the orders below c and Kreweras numbers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .coxeter import CoxeterSystem, CoxeterType, GroupElement
from .flats import IntersectionLattice
from .linalg import coordinates, diag, identity, inverse, matmul, matpow, matvec
from .scalars import UniPoly


def fuss_catalan(ctype: CoxeterType, plus: bool = False) -> UniPoly:
    """``Cat^(m)(W)`` (or the positive version) as a polynomial in ``m``.

    Multiplicative over irreducible factors; the trivial group gives 1.

    >>> from coxcat.coxeter import parse_type
    >>> fuss_catalan(parse_type("A2"))(1), fuss_catalan(parse_type("A2"), plus=True)(1)
    (Fraction(5, 1), Fraction(2, 1))
    """
    m = UniPoly.variable("m")
    out = UniPoly.constant(1, "m")
    shift = -1 if plus else 1
    for f in ctype.factors:
        h = f.coxeter_number
        for e in f.exponents:
            out = out * (m * h + e + shift)
        out = out / f.order
    return out


@dataclass
class NCElement:
    index: int
    element: GroupElement
    length: int
    flat: int
    orbit: int
    canonical: tuple[int, ...]
    support: frozenset[int]


class NCLattice:
    """The interval ``[e, c]`` in absolute order, with the orders ⊏ and ≪."""

    def __init__(self, system: CoxeterSystem, lattice: IntersectionLattice | None = None,
                 c: GroupElement | None = None):
        self.system = W = system
        self.lattice = lattice if lattice is not None else IntersectionLattice(system)
        self.c = c if c is not None else W.coxeter_element
        n = W.rank
        if W.reflection_length(self.c) != n or W.support(self.c) != frozenset(range(n)):
            raise ValueError("c is not a Coxeter element")
        members = [w for w in W.elements
                   if W.reflection_length(w) + W.reflection_length(~w * self.c) == n]
        members.sort(key=lambda w: W.reflection_length(w))
        self.items: list[NCElement] = []
        self.index: dict[GroupElement, int] = {}
        for w in members:
            f = self.lattice.flat_of(w)
            rec = NCElement(len(self.items), w, W.reflection_length(w), f,
                            self.lattice.flat_orbit[f], (), W.support(w))
            self.index[w] = rec.index
            self.items.append(rec)
        for rec in self.items:
            rec.canonical = self._canonical(rec)

    def __len__(self):
        return len(self.items)

    def __contains__(self, w: GroupElement) -> bool:
        return w in self.index

    def item(self, w: GroupElement) -> NCElement:
        return self.items[self.index[w]]

    # -- canonical factorisation ------------------------------------------------

    def _canonical(self, rec: NCElement) -> tuple[int, ...]:
        W = self.system
        simples = self.lattice.parabolic_simples(rec.flat)
        target = rec.element

        def search(prefix: GroupElement, chosen: list[int], left: list[int]):
            if not left:
                return tuple(chosen) if prefix == target else None
            for a in left:
                nxt = prefix * W.reflections[a]
                if W.reflection_length(nxt) == len(chosen) + 1 and W.abs_leq(nxt, target):
                    got = search(nxt, chosen + [a], [b for b in left if b != a])
                    if got is not None:
                        return got
            return None

        got = search(W.identity, [], simples)
        if got is None:
            raise ArithmeticError("no canonical factorisation found")
        return got

    def canonical_factorization(self, w: GroupElement) -> list[GroupElement]:
        return [self.system.reflections[a] for a in self.item(w).canonical]

    # -- orders ---------------------------------------------------------------------

    @cached_property
    def leq_matrix(self) -> list[list[bool]]:
        W = self.system
        out = []
        for u in self.items:
            ui = ~u.element
            out.append([W.reflection_length(ui * v.element) + u.length == v.length for v in self.items])
        return out

    def leq(self, u: GroupElement, w: GroupElement) -> bool:
        return self.leq_matrix[self.index[u]][self.index[w]]

    @cached_property
    def _subwords(self) -> list[frozenset[int]]:
        W = self.system
        out = []
        for rec in self.items:
            refl = [W.reflections[a] for a in rec.canonical]
            prods = set()
            for mask in itertools.product((0, 1), repeat=len(refl)):
                prods.add(self.index[W.product(t for t, b in zip(refl, mask) if b)])
            out.append(frozenset(prods))
        return out

    def subword_elements(self, w: GroupElement) -> list[GroupElement]:
        return [self.items[i].element for i in sorted(self._subwords[self.index[w]])]

    def sqsubset(self, u: GroupElement, w: GroupElement) -> bool:
        """``u ⊏ w``: ``u`` is a subword of the canonical factorisation of ``w``."""
        return self.index[u] in self._subwords[self.index[w]]

    def full_support_in(self, u: GroupElement, w: GroupElement) -> bool:
        """Whether ``u`` (inside ``W_Fix(w)``) lies in no proper standard parabolic of it."""
        W = self.system
        basis = [W.roots[a] for a in self.item(w).canonical]
        used = set()
        for v in W.moved_vectors(u):
            coords = coordinates(basis, v)
            if coords is None:
                return False
            used.update(i for i, x in enumerate(coords) if x != 0)
        return len(used) == len(basis)

    @cached_property
    def _ll(self) -> dict[tuple[int, int], bool]:
        return {}

    def ll(self, u: GroupElement, w: GroupElement) -> bool:
        """``u ≪ w``: ``u <= w`` and ``u`` has full support in ``W_Fix(w)``."""
        key = (self.index[u], self.index[w])
        got = self._ll.get(key)
        if got is None:
            got = self.leq_matrix[key[0]][key[1]] and self.full_support_in(u, w)
            self._ll[key] = got
        return got

    def unique_middle(self, u: GroupElement, w: GroupElement) -> GroupElement:
        """The unique ``v`` with ``u ≪ v ⊏ w`` (requires ``u <= w``)."""
        if not self.leq(u, w):
            raise ValueError("unique_middle needs u <= w")
        found = [v for v in self.subword_elements(w) if self.ll(u, v)]
        if len(found) != 1:
            raise ArithmeticError(f"{len(found)} middle elements instead of one")
        return found[0]

    def is_full_support(self, w: GroupElement) -> bool:
        return self.item(w).support == frozenset(range(self.system.rank))

    def kreweras(self, w: GroupElement) -> GroupElement:
        """Bipartite Kreweras map ``w -> c+ w c-``."""
        W = self.system
        if self.c != W.coxeter_element:
            raise ValueError("the bipartite Kreweras map needs the bipartite Coxeter element")
        return W.c_plus * w * W.c_minus

    def coxeter_subword(self, I) -> GroupElement:
        """``c_I``: the subword of ``c`` on the simple reflections in ``I``."""
        W = self.system
        top = self.item(self.c).canonical
        return W.product(W.reflections[a] for a in top if a in set(I))

    # -- chains ---------------------------------------------------------------------

    def chains_from(self, m: int, plus: bool = False) -> list[int]:
        """Number of chains ``w = w_1 <= ... <= w_m`` starting at each element.

        With ``plus`` the top element must have full support.
        """
        if m < 1:
            raise ValueError("m must be at least 1")
        cur = [1 if (not plus or self.is_full_support(r.element)) else 0 for r in self.items]
        L = self.leq_matrix
        size = len(self.items)
        for _ in range(m - 1):
            cur = [sum(cur[j] for j in range(size) if L[i][j]) for i in range(size)]
        return cur

    def kappa(self, m: int, plus: bool = False) -> list[int]:
        """Chain census ``kappa`` (or ``kappa+``) indexed by orbit."""
        out = [0] * len(self.lattice.orbits)
        for rec, k in zip(self.items, self.chains_from(m, plus)):
            out[rec.orbit] += k
        return out

    def narayana(self, m: int, plus: bool = False) -> list[int]:
        """``Nar^(m)(W, i)`` for ``i = 0..n``, by the length of the bottom element."""
        out = [0] * (self.system.rank + 1)
        for rec, k in zip(self.items, self.chains_from(m, plus)):
            out[rec.length] += k
        return out

    def _interval_catalan(self, w: GroupElement, top: GroupElement, plus: bool = False) -> UniPoly:
        ctype = self.lattice.parabolic_type(self.lattice.flat_of(~w * top))
        p = fuss_catalan(ctype, plus)
        return p(UniPoly((-1, 1), "m"))

    def kappa_poly(self, orbit: int) -> UniPoly:
        """``kappa(W, X, m)`` as a polynomial: Fuss-Catalan numbers of the intervals above the class."""
        out = UniPoly((), "m")
        for rec in self.items:
            if rec.orbit == orbit:
                out = out + self._interval_catalan(rec.element, self.c)
        return out

    def kappa_plus_poly(self, orbit: int) -> UniPoly:
        """``kappa+(W, X, m)`` by inclusion-exclusion over the subwords ``c_I``."""
        n = self.system.rank
        out = UniPoly((), "m")
        for r in range(n + 1):
            for I in itertools.combinations(range(n), r):
                cI = self.coxeter_subword(I)
                sgn = (-1) ** (n - r)
                for rec in self.items:
                    if rec.orbit == orbit and self.leq(rec.element, cI):
                        out = out + sgn * self._interval_catalan(rec.element, cI)
        return out

    # -- Kreweras matrices ------------------------------------------------------------

    def orbit_representative(self, orbit: int) -> GroupElement:
        return next(r.element for r in self.items if r.orbit == orbit)

    def _census_matrix(self, rel) -> list[list[int]]:
        k = len(self.lattice.orbits)
        reps = [self.orbit_representative(j) for j in range(k)]
        mat = [[0] * k for _ in range(k)]
        for j, w in enumerate(reps):
            for rec in self.items:
                if rel(rec.element, w):
                    mat[rec.orbit][j] += 1
        return mat

    @cached_property
    def matrices(self) -> dict[str, list[list]]:
        """The matrices Q, R, N, D and the vector U over the orbits (dimension ascending).

        Column Y counts, below a representative of Y, the elements of each class
        in absolute order (Q), in ≪ (R) and in ⊏ (N).
        """
        lat = self.lattice
        n = self.system.rank
        Q = self._census_matrix(self.leq)
        R = self._census_matrix(self.ll)
        N = self._census_matrix(self.sqsubset)
        D = diag([(-1) ** (n - o.dim) for o in lat.orbits])
        # U sits at the class of c, the flat whose parabolic is W itself
        U = [1 if o.dim == 0 else 0 for o in lat.orbits]
        return {"Q": Q, "R": R, "N": N, "D": D, "U": U}

    def park_vector(self, m: int) -> list:
        mats = self.matrices
        return matvec(matpow(mats["Q"], m), mats["U"])

    def park_plus_vector(self, m: int) -> list:
        mats = self.matrices
        return matvec(matmul(matpow(mats["Q"], m - 1), mats["R"]), mats["U"])

    def matrix_identities(self) -> dict[str, bool]:
        mats = self.matrices
        Q, R, N, D = mats["Q"], mats["R"], mats["N"], mats["D"]
        DN = matmul(D, N)
        I = identity(len(Q))
        return {
            "(DN)^2 = I": matmul(DN, DN) == I,
            "RN = Q": matmul(R, N) == Q,
            "Q^-1 = DNQDN": inverse(Q) == matmul(matmul(DN, Q), DN),
            "R = QDND": R == matmul(matmul(Q, D), matmul(N, D)),
        }


def catalan_number(ctype: CoxeterType, m: int = 1, plus: bool = False) -> int:
    v = fuss_catalan(ctype, plus)(m)
    assert v.denominator == 1
    return int(v)
