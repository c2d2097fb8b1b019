"""Finite Coxeter systems realised by their root systems.

Roots are stored in simple-root coordinates.  Group elements are
permutations of the root indices; positive roots come first (indices
``0..N-1``, simple roots ``0..n-1``) and ``-beta_k`` has index ``N + k``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .linalg import Echelon
from .scalars import FieldMismatchError, NumberField, coxeter_field, sign


class TypeParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Cartan-Killing types


_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}
_E_EXPONENTS = {6: (1, 4, 5, 7, 8, 11), 7: (1, 5, 7, 9, 11, 13, 17), 8: (1, 7, 11, 13, 17, 19, 23, 29)}


@dataclass(frozen=True, order=True)
class IrreducibleType:
    family: str
    rank: int
    param: int = 0  # dihedral bond label for family "I"

    def __str__(self):
        if self.family == "I":
            return f"I2({self.param})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        f, n = self.family, self.rank
        if f == "A":
            return math.factorial(n + 1)
        if f == "B":
            return 2**n * math.factorial(n)
        if f == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if f == "E":
            return _E_ORDERS[n]
        if f == "F":
            return 1152
        if f == "G":
            return 12
        if f == "H":
            return {3: 120, 4: 14400}[n]
        return 2 * self.param

    @property
    def exponents(self) -> tuple[int, ...]:
        f, n = self.family, self.rank
        if f == "A":
            return tuple(range(1, n + 1))
        if f == "B":
            return tuple(range(1, 2 * n, 2))
        if f == "D":
            return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
        if f == "E":
            return _E_EXPONENTS[n]
        if f == "F":
            return (1, 5, 7, 11)
        if f == "G":
            return (1, 5)
        if f == "H":
            return {3: (1, 5, 9), 4: (1, 11, 19, 29)}[n]
        return (1, self.param - 1)

    @property
    def coxeter_number(self) -> int:
        return max(self.exponents) + 1

    def coxeter_matrix(self) -> list[list[int]]:
        n = self.rank
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]

        def bond(i, j, k):
            m[i][j] = m[j][i] = k

        f = self.family
        if f == "I":
            bond(0, 1, self.param)
        elif f == "G":
            bond(0, 1, 6)
        elif f == "E":
            # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
            bond(0, 2, 3)
            bond(1, 3, 3)
            for i in range(2, n - 1):
                bond(i, i + 1, 3)
        else:
            for i in range(n - 1):
                bond(i, i + 1, 3)
            if f == "B":
                bond(n - 2, n - 1, 4)
            elif f == "D":
                m[n - 2][n - 1] = m[n - 1][n - 2] = 2
                bond(n - 3, n - 1, 3)
            elif f == "F":
                bond(1, 2, 4)
            elif f == "H":
                bond(0, 1, 5)
        return m


@dataclass(frozen=True)
class CoxeterType:
    factors: tuple[IrreducibleType, ...]

    def __str__(self):
        return "x".join(str(f) for f in self.factors) if self.factors else "1"

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(e for f in self.factors for e in f.exponents))

    def coxeter_matrix(self) -> list[list[int]]:
        n = self.rank
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        off = 0
        for f in self.factors:
            sub = f.coxeter_matrix()
            for i in range(f.rank):
                for j in range(f.rank):
                    m[off + i][off + j] = sub[i][j]
            off += f.rank
        return m


_TOKEN = re.compile(r"^(?:([ABDEFGH])(\d+)|I2\((\d+)\))$")
_MIN_RANK = {"A": 1, "B": 2, "D": 4}


def parse_type(text: str) -> CoxeterType:
    """Parse strings such as ``"A3"``, ``"I2(7)"`` or ``"A2xA1"``.

    >>> str(parse_type("B2 x A1"))
    'B2xA1'
    """
    if not isinstance(text, str) or not text.strip():
        raise TypeParseError("empty type string")
    parts = re.split(r"\s*[x×*]\s*", text.strip())
    factors = []
    for part in parts:
        mt = _TOKEN.match(part.strip())
        if not mt:
            raise TypeParseError(f"cannot parse Coxeter type {part!r}")
        fam, num, dihedral = mt.groups()
        if dihedral is not None:
            m = int(dihedral)
            if m < 3:
                raise TypeParseError("I2(m) needs m >= 3")
            factors.append(IrreducibleType("I", 2, m))
            continue
        n = int(num)
        ok = {
            "A": n >= 1, "B": n >= 2, "D": n >= 4, "E": 6 <= n <= 8,
            "F": n == 4, "G": n == 2, "H": n in (3, 4),
        }[fam]
        if not ok:
            raise TypeParseError(f"no finite Coxeter group of type {part!r}")
        factors.append(IrreducibleType(fam, n))
    return CoxeterType(tuple(factors))


def classify(coxeter_matrix: Sequence[Sequence[int]]) -> CoxeterType:
    """Recognise the type of a finite Coxeter matrix, factors sorted."""
    n = len(coxeter_matrix)
    seen: set[int] = set()
    factors = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and coxeter_matrix[i][j] > 2:
                    seen.add(j)
                    stack.append(j)
        comp.sort()
        factors.append(_classify_irreducible([[coxeter_matrix[i][j] for j in comp] for i in comp]))
    return CoxeterType(tuple(sorted(factors, key=lambda f: (f.family, f.rank, f.param))))


def _classify_irreducible(m: list[list[int]]) -> IrreducibleType:
    k = len(m)
    if k == 1:
        return IrreducibleType("A", 1)
    if k == 2:
        b = m[0][1]
        return {3: IrreducibleType("A", 2), 4: IrreducibleType("B", 2),
                6: IrreducibleType("G", 2)}.get(b, IrreducibleType("I", 2, b))
    edges = {(i, j): m[i][j] for i in range(k) for j in range(i + 1, k) if m[i][j] > 2}
    deg = [sum(1 for e in edges if i in e) for i in range(k)]
    labels = sorted(edges.values())
    if len(edges) != k - 1:
        raise ValueError("Coxeter graph is not a tree")
    big = [e for e, v in edges.items() if v > 3]
    if max(deg) <= 2:
        ends = [i for i in range(k) if deg[i] == 1]
        if not big:
            return IrreducibleType("A", k)
        if len(big) == 1:
            (i, j), v = big[0], edges[big[0]]
            at_end = i in ends or j in ends
            if v == 4 and at_end:
                return IrreducibleType("B", k)
            if v == 4 and k == 4:
                return IrreducibleType("F", 4)
            if v == 5 and at_end and k in (3, 4):
                return IrreducibleType("H", k)
        raise ValueError(f"infinite Coxeter group with labels {labels}")
    if big or deg.count(3) != 1 or max(deg) > 3:
        raise ValueError("infinite Coxeter group")
    centre = deg.index(3)
    arms = []
    for nb in (j for j in range(k) if (min(centre, j), max(centre, j)) in edges):
        length, prev, cur = 1, centre, nb
        while True:
            nxt = [j for j in range(k) if j != prev and (min(cur, j), max(cur, j)) in edges]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return IrreducibleType("D", k)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return IrreducibleType("E", k)
    raise ValueError("infinite Coxeter group")


def cartan_matrix(coxeter_matrix: Sequence[Sequence[int]]):
    """Cartan-type matrix ``A`` with ``s_i(alpha_j) = alpha_j - A[i][j] alpha_i``.

    Bonds 4 and 6 get integer entries (the later node is the short root);
    every other bond ``m`` is symmetric ``-2cos(pi/m)``.  Returns ``(A, field)``
    with ``field`` None for the rationals.
    """
    n = len(coxeter_matrix)
    fields = {coxeter_field(coxeter_matrix[i][j]) for i in range(n) for j in range(n) if i != j}
    fields.discard(None)
    if len(fields) > 1:
        raise FieldMismatchError("factors need incompatible number fields")
    field: NumberField | None = fields.pop() if fields else None
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        for j in range(i + 1, n):
            b = coxeter_matrix[i][j]
            if b == 2:
                continue
            if b == 3:
                a[i][j] = a[j][i] = -1
            elif b == 4:
                a[i][j], a[j][i] = -1, -2
            elif b == 6:
                a[i][j], a[j][i] = -1, -3
            else:
                if field is None or field.m != b:
                    raise FieldMismatchError(f"bond {b} needs its own number field")
                a[i][j] = a[j][i] = -field.gen()
    if field is not None:
        a = [[field(x) for x in row] for row in a]
    return a, field


# ---------------------------------------------------------------------------
# group elements


class GroupElement:
    """Element of a Coxeter group, acting as a permutation of the roots."""

    __slots__ = ("system", "perm", "_hash")

    def __init__(self, system: "CoxeterSystem", perm: tuple[int, ...]):
        self.system = system
        self.perm = perm
        self._hash = hash(perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        p = self.perm
        return GroupElement(self.system, tuple([p[i] for i in other.perm]))

    def __invert__(self) -> "GroupElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return GroupElement(self.system, tuple(inv))

    inverse = __invert__

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.perm == other.perm

    def __hash__(self):
        return self._hash

    def __call__(self, root: int) -> int:
        return self.perm[root]

    @property
    def length(self) -> int:
        return self.system.length(self)

    @property
    def reflection_length(self) -> int:
        return self.system.reflection_length(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def __repr__(self):
        word = self.system.reduced_word(self)
        return "e" if not word else "".join(f"s{i + 1}" for i in word)


# ---------------------------------------------------------------------------
# systems


class CoxeterSystem:
    """A finite Coxeter system with its root system and bipartite Coxeter element.

    ``plus`` optionally fixes the colour class S+ (by simple index); by default
    each component puts its lowest-indexed simple reflection in S+.
    """

    def __init__(self, cartan: Sequence[Sequence], field=None, ctype: CoxeterType | None = None,
                 plus: Iterable[int] | None = None):
        self.cartan = [list(r) for r in cartan]
        self.field = field
        self.rank = n = len(self.cartan)
        self.coxeter_matrix = self._coxeter_matrix_from_cartan()
        self.ctype = ctype if ctype is not None else classify(self.coxeter_matrix)
        self._build_roots()
        self.components = self._components()
        self.plus = frozenset(plus) if plus is not None else self._default_plus()
        self.minus = frozenset(range(n)) - self.plus
        for i in self.plus:
            for j in self.plus:
                if i != j and self.coxeter_matrix[i][j] != 2:
                    raise ValueError("S+ is not an independent set")
        self.identity = GroupElement(self, tuple(range(2 * self.num_positive)))
        self.simple_reflections = [GroupElement(self, p) for p in self._simple_perms]
        self._fix_cache: dict[GroupElement, tuple[int, frozenset[int]]] = {}
        self._length_cache: dict[GroupElement, int] = {}
        self._build_reflections()

    # -- construction ------------------------------------------------------

    def _coxeter_matrix_from_cartan(self) -> list[list[int]]:
        n = self.rank
        m = [[1] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                p = self.cartan[i][j] * self.cartan[j][i]
                # a_ij a_ji = 4cos^2(pi/m)
                x = float(p)
                if x == 0:
                    m[i][j] = 2
                else:
                    m[i][j] = round(math.pi / math.acos(math.sqrt(x) / 2))
        return m

    def _reflect(self, i: int, v: tuple) -> tuple:
        k = sum(self.cartan[i][j] * v[j] for j in range(self.rank) if v[j] != 0)
        if k == 0:
            return v
        v = list(v)
        v[i] = v[i] - k
        return tuple(v)

    def _build_roots(self) -> None:
        n = self.rank
        zero = self.field(0) if self.field is not None else 0
        one = self.field(1) if self.field is not None else 1
        simple = [tuple(one if j == i else zero for j in range(n)) for i in range(n)]
        pos = list(simple)
        index = {v: i for i, v in enumerate(pos)}
        parent: list[tuple[int, int] | None] = [None] * n
        frontier = list(range(n))
        while frontier:
            nxt = []
            for k in frontier:
                for i in range(n):
                    if k == i:
                        continue
                    v = self._reflect(i, pos[k])
                    if v in index:
                        continue
                    index[v] = len(pos)
                    pos.append(v)
                    parent.append((i, k))
                    nxt.append(index[v])
            frontier = nxt
        self.num_positive = N = len(pos)
        self.roots: list[tuple] = pos + [tuple(-x for x in v) for v in pos]
        self.root_index = {v: i for i, v in enumerate(self.roots)}
        self._root_parent = parent
        for v in pos:
            s = next(sign(x) for x in v if x != 0)
            if s < 0 or any(sign(x) < 0 for x in v):
                raise ArithmeticError("root closure produced a non-positive root")
        self._simple_perms = []
        for i in range(n):
            perm = tuple(self.root_index[self._reflect(i, v)] for v in self.roots)
            self._simple_perms.append(perm)
        assert len(self.roots) == 2 * N

    def _build_reflections(self) -> None:
        refl: list[GroupElement] = []
        for k in range(self.num_positive):
            par = self._root_parent[k]
            if par is None:
                refl.append(self.simple_reflections[k])
            else:
                i, j = par
                s = self.simple_reflections[i]
                refl.append(s * refl[j] * s)
        self.reflections = refl
        self.reflection_index = {t: k for k, t in enumerate(refl)}

    def _components(self) -> list[tuple[int, ...]]:
        n, seen, comps = self.rank, set(), []
        for s in range(n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.coxeter_matrix[i][j] > 2:
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return comps

    def _default_plus(self) -> frozenset[int]:
        colour = {}
        for comp in self.components:
            colour[comp[0]] = 0
            stack = [comp[0]]
            while stack:
                i = stack.pop()
                for j in comp:
                    if j != i and self.coxeter_matrix[i][j] > 2 and j not in colour:
                        colour[j] = 1 - colour[i]
                        stack.append(j)
        return frozenset(i for i, c in colour.items() if c == 0)

    # -- basic data ----------------------------------------------------------

    def __repr__(self):
        return f"CoxeterSystem({self.ctype})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def coxeter_number(self) -> int:
        if len(self.components) != 1:
            raise ValueError("Coxeter number is defined for irreducible systems")
        return 2 * self.num_positive // self.rank

    def component_coxeter_numbers(self) -> list[int]:
        out = []
        for comp in self.components:
            npos = sum(1 for k in range(self.num_positive) if self.root_support(k) <= set(comp))
            out.append(2 * npos // len(comp))
        return out

    def neg(self, root: int) -> int:
        N = self.num_positive
        return root + N if root < N else root - N

    def is_positive(self, root: int) -> bool:
        return root < self.num_positive

    def positive_part(self, root: int) -> int:
        return root if root < self.num_positive else root - self.num_positive

    def root_support(self, root: int) -> set[int]:
        return {i for i, x in enumerate(self.roots[root]) if x != 0}

    def root_component(self, root: int) -> int:
        i = next(iter(self.root_support(root)))
        return next(c for c, comp in enumerate(self.components) if i in comp)

    def element(self, word: Iterable[int]) -> GroupElement:
        w = self.identity
        for i in word:
            w = w * self.simple_reflections[i]
        return w

    def product(self, elements: Iterable[GroupElement]) -> GroupElement:
        w = self.identity
        for x in elements:
            w = w * x
        return w

    @cached_property
    def c_plus(self) -> GroupElement:
        return self.element(sorted(self.plus))

    @cached_property
    def c_minus(self) -> GroupElement:
        return self.element(sorted(self.minus))

    @cached_property
    def coxeter_element(self) -> GroupElement:
        """Bipartite Coxeter element ``c = c+ c-``."""
        return self.c_plus * self.c_minus

    @cached_property
    def longest_element(self) -> GroupElement:
        w = self.identity
        while True:
            i = next((i for i in range(self.rank) if self.is_positive(w.perm[i])), None)
            if i is None:
                return w
            w = w * self.simple_reflections[i]

    def length(self, w: GroupElement) -> int:
        """Coxeter length: number of positive roots sent to negative roots."""
        got = self._length_cache.get(w)
        if got is None:
            N = self.num_positive
            got = sum(1 for k in range(N) if w.perm[k] >= N)
            self._length_cache[w] = got
        return got

    def reduced_word(self, w: GroupElement) -> list[int]:
        word = []
        while True:
            i = next((i for i in range(self.rank) if not self.is_positive(w.perm[i])), None)
            if i is None:
                return word[::-1]
            word.append(i)
            w = w * self.simple_reflections[i]

    def matrix(self, w: GroupElement) -> list[list]:
        """Matrix of ``w`` in the simple-root basis (columns are images)."""
        n = self.rank
        cols = [self.roots[w.perm[j]] for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def moved_vectors(self, w: GroupElement) -> list[tuple]:
        """Columns of ``M_w - I``: they span the moved space ``Mov(w)``."""
        n = self.rank
        out = []
        for j in range(n):
            v = list(self.roots[w.perm[j]])
            v[j] = v[j] - 1
            out.append(tuple(v))
        return out

    def _fix_data(self, w: GroupElement) -> tuple[int, frozenset[int]]:
        got = self._fix_cache.get(w)
        if got is None:
            ech = Echelon(self.moved_vectors(w))
            refl = frozenset(k for k in range(self.num_positive) if ech.contains(self.roots[k]))
            got = (self.rank - ech.rank, refl)
            self._fix_cache[w] = got
        return got

    def fix_dim(self, w: GroupElement) -> int:
        return self._fix_data(w)[0]

    def reflection_length(self, w: GroupElement) -> int:
        return self.rank - self._fix_data(w)[0]

    def fix_reflections(self, w: GroupElement) -> frozenset[int]:
        """Reflections whose hyperplane contains ``Fix(w)``, as positive-root indices."""
        return self._fix_data(w)[1]

    def support(self, w: GroupElement) -> frozenset[int]:
        """Smallest set J of simple indices with ``w`` in the standard parabolic ``W_J``."""
        out = set()
        for v in self.moved_vectors(w):
            out.update(i for i, x in enumerate(v) if x != 0)
        return frozenset(out)

    def conjugate_reflection(self, w: GroupElement, k: int) -> int:
        """Index of the reflection ``w t_k w^-1``."""
        return self.positive_part(w.perm[k])

    def abs_leq(self, u: GroupElement, w: GroupElement) -> bool:
        """Absolute order: ``l(u) + l(u^-1 w) = l(w)``."""
        return self.reflection_length(u) + self.reflection_length(~u * w) == self.reflection_length(w)

    # -- enumeration ---------------------------------------------------------

    @cached_property
    def elements(self) -> list[GroupElement]:
        """All group elements in breadth-first order from the identity."""
        out = [self.identity]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.simple_reflections:
                    x = w * s
                    if x not in seen:
                        seen.add(x)
                        out.append(x)
                        nxt.append(x)
            frontier = nxt
        return out

    def iter_orbit(self, root: int, w: GroupElement) -> Iterator[int]:
        r = root
        while True:
            yield r
            r = w.perm[r]
            if r == root:
                return

    def element_order(self, w: GroupElement) -> int:
        k, x = 1, w
        while not x.is_identity():
            x = x * w
            k += 1
        return k

    # -- parabolic subsystems ------------------------------------------------

    def parabolic(self, J: Iterable[int]) -> "Parabolic":
        J = tuple(sorted(J))
        key = J
        cache = self.__dict__.setdefault("_parabolics", {})
        if key not in cache:
            cache[key] = Parabolic(self, J)
        return cache[key]


class Parabolic:
    """Standard parabolic subsystem ``W_J`` as a system of its own plus the embedding.

    The subsystem uses the restricted bipartition, so its Coxeter element is
    the subword of ``c`` on ``J``.
    """

    def __init__(self, ambient: CoxeterSystem, J: tuple[int, ...]):
        self.ambient = ambient
        self.J = J
        cartan = [[ambient.cartan[i][j] for j in J] for i in J]
        plus = [a for a, i in enumerate(J) if i in ambient.plus]
        self.system = CoxeterSystem(cartan, ambient.field, plus=plus)
        n = ambient.rank
        emb = []
        for v in self.system.roots:
            full = [0] * n if ambient.field is None else [ambient.field(0)] * n
            for a, i in enumerate(J):
                full[i] = v[a]
            emb.append(ambient.root_index[tuple(full)])
        self.root_embedding = emb
        self._back = {r: a for a, r in enumerate(emb)}

    def embed(self, w: GroupElement) -> GroupElement:
        word = self.system.reduced_word(w)
        return self.ambient.element(self.J[a] for a in word)

    def restrict(self, w: GroupElement) -> GroupElement:
        """Sub-system element acting like the ambient element ``w`` of ``W_J``."""
        return GroupElement(self.system, tuple(self._back[w.perm[r]] for r in self.root_embedding))

    def contains(self, w: GroupElement) -> bool:
        return self.ambient.support(w) <= set(self.J)

    def reflection_to_ambient(self, k: int) -> int:
        return self.root_embedding[k]


def build_system(ctype: CoxeterType | str) -> CoxeterSystem:
    """Coxeter system of a type, e.g. ``build_system("H3")``.

    >>> W = build_system("A2")
    >>> W.order, W.num_positive, W.coxeter_number()
    (6, 3, 3)
    """
    if isinstance(ctype, str):
        ctype = parse_type(ctype)
    cartan, field = cartan_matrix(ctype.coxeter_matrix())
    return CoxeterSystem(cartan, field, ctype=ctype)


HEAVY_FAMILIES = {("H", 4), ("E", 6), ("E", 7), ("E", 8)}


def is_heavy(ctype: CoxeterType) -> bool:
    """Types kept out of the default tier: H4, E6-E8 and anything of rank above 5."""
    return ctype.rank > 5 or any((f.family, f.rank) in HEAVY_FAMILIES for f in ctype.factors)
