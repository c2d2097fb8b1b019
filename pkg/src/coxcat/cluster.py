"""Generalized cluster complexes and their faces labelled by parabolic classes.

Vertices are coloured almost positive roots ``(root, colour)``: a positive
root with a colour in ``1..m`` or a negative simple root with colour 1.
Vertex ids are positions in the coloured Steinberg order, so a face listed
by decreasing id multiplies out to its product ``∏f``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .coxeter import GroupElement
from .noncross import NCLattice, fuss_catalan
from .scalars import UniPoly


@dataclass(frozen=True)
class ColoredRoot:
    root: int
    color: int


class ClusterComplex:
    """The complex ``Υ(W, m)`` for the bipartite Coxeter element."""

    def __init__(self, nc: NCLattice, m: int):
        W = nc.system
        if nc.c != W.coxeter_element:
            raise ValueError("cluster complexes use the bipartite Coxeter element")
        if m < 1:
            raise ValueError("m must be at least 1")
        self.nc = nc
        self.system = W
        self.lattice = nc.lattice
        self.m = m
        self.vertices: list[ColoredRoot] = self._colored_order()
        self.vertex_id = {v: i for i, v in enumerate(self.vertices)}
        self._rot = [self.vertex_id[self._rotate(v)] for v in self.vertices]
        self._build_compat()

    # -- vertices ---------------------------------------------------------------

    def _steinberg_sequence(self, comp: tuple[int, ...]) -> tuple[list[int], int, int]:
        """Almost positive roots of one component in the order ``α_1, α_2, ...``.

        The first entries are ``-Δ-`` then ``Δ+``, and ``α_(i+n) = c(α_i)``.
        """
        W = self.system
        c = W.coxeter_element
        minus = [i for i in comp if i in W.minus]
        plus = [i for i in comp if i in W.plus]
        npos = sum(1 for k in range(W.num_positive) if W.root_support(k) <= set(comp))
        seq = [W.neg(i) for i in minus] + plus
        while len(seq) < npos + len(comp):
            seq.append(c.perm[seq[len(seq) - len(comp)]])
        r = len(minus)
        tail_pos = seq[npos:npos + r]
        tail_neg = seq[npos + r:]
        if set(tail_pos) != set(minus) or set(tail_neg) != {W.neg(i) for i in plus}:
            raise ArithmeticError("Steinberg order does not end with Δ- then -Δ+")
        if len(set(seq)) != len(seq):
            raise ArithmeticError("Steinberg order repeats a root")
        return seq, r, npos

    def _colored_order(self) -> list[ColoredRoot]:
        W = self.system
        seqs = [self._steinberg_sequence(comp) for comp in W.components]
        head, middle, tail = [], [], []
        for seq, r, npos in seqs:
            head.extend(ColoredRoot(x, 1) for x in seq[:r])
            tail.extend(ColoredRoot(x, 1) for x in seq[npos + r:])
        for color in range(self.m, 0, -1):
            for seq, r, npos in seqs:
                middle.extend(ColoredRoot(x, color) for x in seq[r:npos + r])
        out = head + middle + tail
        assert len(out) == self.m * W.num_positive + W.rank
        return out

    def is_negative(self, v: int) -> bool:
        return not self.system.is_positive(self.vertices[v].root)

    def reflection(self, v: int) -> GroupElement:
        W = self.system
        return W.reflections[W.positive_part(self.vertices[v].root)]

    # -- rotation and compatibility -------------------------------------------------

    def _rotate_root(self, root: int) -> int:
        W = self.system
        if not W.is_positive(root):
            i = W.neg(root)
            if i in W.plus:
                return i
        elif root < W.rank and root in W.minus:
            return W.neg(root)
        return W.coxeter_element.perm[root]

    def _rotate(self, v: ColoredRoot) -> ColoredRoot:
        if self.system.is_positive(v.root) and v.color < self.m:
            return ColoredRoot(v.root, v.color + 1)
        return ColoredRoot(self._rotate_root(v.root), 1)

    def rotate(self, v: int) -> int:
        return self._rot[v]

    def orbit(self, v: int) -> list[int]:
        out = [v]
        while True:
            nxt = self._rot[out[-1]]
            if nxt == v:
                return out
            out.append(nxt)

    def _build_compat(self) -> None:
        W = self.system
        orbits = [self.orbit(v) for v in range(len(self.vertices))]
        nv = len(self.vertices)
        masks = [0] * nv
        for u in range(nv):
            steps = next(k for k, x in enumerate(orbits[u]) if self.is_negative(x))
            delta = W.neg(self.vertices[orbits[u][steps]].root)
            for v in range(nv):
                if v == u:
                    continue
                orb = orbits[v]
                image = self.vertices[orb[steps % len(orb)]].root
                if W.roots[image][delta] == 0:
                    masks[u] |= 1 << v
        self.compat_masks = masks

    def compatible(self, u: int, v: int) -> bool:
        return bool(self.compat_masks[u] >> v & 1)

    # -- faces ----------------------------------------------------------------------

    @cached_property
    def faces(self) -> list[tuple[tuple[int, ...], int]]:
        """All faces as (vertex ids increasing, NC index of the product)."""
        W = self.system
        nc = self.nc
        refl = [self.reflection(v) for v in range(len(self.vertices))]
        out = [((), nc.index[W.identity])]
        masks = self.compat_masks
        stack = []
        for v in range(len(self.vertices) - 1, -1, -1):
            stack.append(((v,), masks[v] & ((1 << v) - 1), refl[v]))
        while stack:
            face, cand, prod = stack.pop()
            idx = nc.index.get(prod)
            if idx is None or nc.items[idx].length != len(face):
                raise ArithmeticError("face product is not a noncrossing partition of the right length")
            out.append((face[::-1], idx))
            while cand:
                v = cand.bit_length() - 1
                cand ^= 1 << v
                stack.append((face + (v,), masks[v] & cand, prod * refl[v]))
        out.sort(key=lambda f: (len(f[0]), f[0]))
        n = W.rank
        c_idx = nc.index[nc.c]
        for face, idx in out:
            if len(face) == n and idx != c_idx:
                raise ArithmeticError("facet product differs from c")
        return out

    @cached_property
    def face_index(self) -> dict[tuple[int, ...], int]:
        return {f: i for i, (f, _) in enumerate(self.faces)}

    @cached_property
    def _label_of_nc(self) -> list[int]:
        nc = self.nc
        return [nc.item(nc.kreweras(r.element)).orbit for r in nc.items]

    def face_label(self, i: int) -> int:
        """Orbit of ``Fix(c+ ∏f c-)``."""
        return self._label_of_nc[self.faces[i][1]]

    def face_product(self, face) -> GroupElement:
        W = self.system
        return W.product(self.reflection(v) for v in sorted(face, reverse=True))

    def is_positive_face(self, face) -> bool:
        return not any(self.is_negative(v) for v in face)

    def gamma(self, plus: bool = False) -> list[int]:
        """Face census ``γ`` (or ``γ+`` on the positive part) indexed by orbit."""
        out = [0] * len(self.lattice.orbits)
        for i, (face, _) in enumerate(self.faces):
            if plus and not self.is_positive_face(face):
                continue
            out[self.face_label(i)] += 1
        return out

    def f_vector(self, plus: bool = False) -> list[int]:
        """``(f_-1, f_0, ..., f_(n-1))``."""
        out = [0] * (self.system.rank + 1)
        for face, _ in self.faces:
            if plus and not self.is_positive_face(face):
                continue
            out[len(face)] += 1
        return out

    def h_vector(self, plus: bool = False) -> list[int]:
        return h_from_f(self.f_vector(plus))

    def facets(self, plus: bool = False) -> int:
        return self.f_vector(plus)[-1]

    def rotate_face(self, face) -> tuple[int, ...]:
        return tuple(sorted(self._rot[v] for v in face))

    def positive_product_counts(self) -> Counter:
        """Number of positive faces with each product, keyed by NC index."""
        return Counter(idx for face, idx in self.faces if self.is_positive_face(face))

    # -- bijection with chains ----------------------------------------------------------

    def positive_order(self, roots) -> list[int]:
        """Positive roots sorted decreasingly in the Steinberg order."""
        pos = {self.vertices[v].root: v for v in range(len(self.vertices))
               if self.vertices[v].color == 1 and not self.is_negative(v)}
        return sorted(roots, key=lambda r: pos[r], reverse=True)

    def face_to_chain(self, face) -> tuple[GroupElement, ...]:
        """Chain ``w_0 ⊏ w_1 <= ... <= w_m`` attached to a face."""
        W, nc, m = self.system, self.nc, self.m
        colored = {k: [] for k in range(1, m + 1)}
        negatives = set()
        for v in face:
            x = self.vertices[v]
            if self.is_negative(v):
                negatives.add(W.neg(x.root))
            else:
                colored[x.color].append(x.root)
        keep = [i for i in range(W.rank) if i not in negatives]
        top = nc.coxeter_subword(keep)
        primes = [None] * (m + 1)
        primes[m] = top
        for k in range(m, 0, -1):
            part = W.product(W.reflections[r] for r in self.positive_order(colored[k]))
            primes[k - 1] = primes[k] * ~part
        chain = [primes[0]]
        for k in range(1, m + 1):
            chain.append(interval_element(nc, primes[k - 1], self.positive_order(colored[k]), primes[k]))
        return tuple(chain)

    def chain_to_face(self, chain) -> tuple[int, ...]:
        W, nc, m = self.system, self.nc, self.m
        ws = list(chain[1:]) + [nc.c]
        primes = [chain[0]]
        for k in range(1, m + 1):
            primes.append(nc.unique_middle(ws[k - 1], ws[k]))
        verts = []
        for k in range(1, m + 1):
            for r in interval_face(nc, primes[k - 1], chain[k], primes[k]):
                verts.append(self.vertex_id[ColoredRoot(r, k)])
        supp = nc.item(primes[m]).support
        for i in range(W.rank):
            if i not in supp:
                verts.append(self.vertex_id[ColoredRoot(W.neg(i), 1)])
        return tuple(sorted(verts))

    def chains(self) -> list[tuple[GroupElement, ...]]:
        """All chains ``w_0 ⊏ w_1 <= ... <= w_m`` in NC."""
        nc, m = self.nc, self.m
        L = nc.leq_matrix
        size = len(nc.items)
        out = []

        def extend(prefix):
            if len(prefix) == m + 1:
                out.append(tuple(nc.items[i].element for i in prefix))
                return
            last = prefix[-1]
            for j in range(size):
                if L[last][j]:
                    extend(prefix + [j])

        for w1 in range(size):
            for w0 in nc.subword_elements(nc.items[w1].element):
                extend([nc.index[w0], w1])
        return out


def interval_face(nc: NCLattice, u: GroupElement, v: GroupElement, w: GroupElement) -> list[int]:
    """Positive face (as root indices) attached to ``u ⊏ v ≪ w``.

    With canonical factorisations ``u^-1 v = t_1...t_k`` and ``v^-1 w = u_1...u_j`` the
    roots are those of ``t_k...t_(i+1) t_i t_(i+1)...t_k`` and ``u_1...u_(i-1) u_i u_(i-1)...u_1``.
    """
    W = nc.system
    if not (nc.sqsubset(u, v) and nc.ll(v, w)):
        raise ValueError("interval_face needs u ⊏ v ≪ w")
    ts = nc.canonical_factorization(~u * v)
    us = nc.canonical_factorization(~v * w)
    out = []
    for i, t in enumerate(ts):
        right = W.product(ts[i + 1:])
        out.append(W.reflection_index[~right * t * right])
    for i, t in enumerate(us):
        left = W.product(us[:i])
        out.append(W.reflection_index[left * t * ~left])
    return out


def interval_element(nc: NCLattice, u: GroupElement, roots: list[int], w: GroupElement) -> GroupElement:
    """Inverse of :func:`interval_face`: recover ``v`` from ``u``, the face and ``w``.

    ``roots`` must multiply (in the given order) to ``u^-1 w``; commuting
    neighbours are swapped until the prefixes from ``u`` climb first by ⊏ and
    then by ≪.
    """
    W = nc.system
    refl = [W.reflections[r] for r in roots]
    if u * W.product(refl) != w:
        raise ValueError("face product does not match the interval")
    start = tuple(range(len(refl)))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for order in frontier:
            x = u
            kinds = []
            for i in order:
                y = x * refl[i]
                if y not in nc.index:
                    kinds = None
                    break
                kinds.append("sq" if nc.sqsubset(x, y) else "ll" if nc.ll(x, y) else "?")
                x = y
            if kinds is not None and "?" not in kinds:
                j = kinds.count("sq")
                if kinds == ["sq"] * j + ["ll"] * (len(kinds) - j):
                    return u * W.product(refl[i] for i in order[:j])
            for a in range(len(order) - 1):
                p, q = refl[order[a]], refl[order[a + 1]]
                if p * q == q * p:
                    sw = order[:a] + (order[a + 1], order[a]) + order[a + 2:]
                    if sw not in seen:
                        seen.add(sw)
                        nxt.append(sw)
        frontier = nxt
    raise ArithmeticError("no ordering of the face climbs by ⊏ then ≪")


def h_from_f(f: list[int]) -> list[int]:
    """Solve ``sum f_(i-1) z^(n-i) = sum h_i (z+1)^(n-i)`` for ``h``.

    >>> h_from_f([1, 5, 5])
    [1, 3, 1]
    """
    n = len(f) - 1
    z = UniPoly.variable("z")
    p = UniPoly((), "z")
    for i in range(n + 1):
        p = p + f[i] * z ** (n - i)
    q = p(z - 1)
    coeffs = list(q.coeffs) + [0] * (n + 1 - len(q.coeffs))
    return [int(coeffs[n - i]) for i in range(n + 1)]


def gamma_closed_form(lattice, orbit: int, m: int, plus: bool = False):
    """``(-1)^dim p_X(-mh -+ 1) / [N(W_X) : W_X]``."""
    h = lattice.system.coxeter_number()
    o = lattice.orbits[orbit]
    p = lattice.orbit_char_poly(orbit)
    arg = -m * h + 1 if plus else -m * h - 1
    return (-1) ** o.dim * p(arg) / lattice.normalizer_index(orbit)


def positive_catalan_of_flat(lattice, flat: int, m: int):
    return fuss_catalan(lattice.parabolic_type(flat), plus=True)(m)
