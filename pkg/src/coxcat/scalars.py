"""Exact scalars: rationals, real cyclotomic-cosine fields and univariate polynomials.

Rationals are plain :class:`fractions.Fraction` (or ``int``).  The only
irrational quantities that ever occur are elements of ``Q(2cos(pi/m))``,
represented by :class:`AlgebraicScalar`: a coefficient vector modulo the
minimal polynomial of the generator, together with a rational isolating
interval used to decide signs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class FieldMismatchError(ValueError):
    pass


# ---------------------------------------------------------------------------
# dense rational polynomial helpers (lowest degree first)


def _trim(cs: Sequence) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _pmul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _padd(a: Sequence, b: Sequence) -> tuple:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pscale(a: Sequence, k) -> tuple:
    return _trim([k * x for x in a])


def _pdivmod(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = k
        for i, y in enumerate(b):
            a[shift + i] -= k * y
        a = list(_trim(a))
    return _trim(q), _trim(a)


def _peval(cs: Sequence, x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _pderiv(cs: Sequence) -> tuple:
    return _trim([i * c for i, c in enumerate(cs)][1:])


def _sturm_count(p: Sequence, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    seq = [_trim(p), _pderiv(p)]
    while seq[-1]:
        _, r = _pdivmod(seq[-2], seq[-1])
        seq.append(_pscale(r, -1))
    seq.pop()

    def changes(x):
        signs = [s for s in (_sgn(_peval(q, x)) for q in seq) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return changes(lo) - changes(hi)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# number fields Q(2cos(pi/m))


def _chebyshev_relation(m: int) -> tuple:
    """Integer polynomial ``C_m(x) + 2`` vanishing at ``x = 2cos(pi/m)``.

    ``C_k`` is defined by ``C_k(2cos t) = 2cos(k t)``.
    """
    prev, cur = (2,), (0, 1)
    for _ in range(m - 1):
        prev, cur = cur, _padd(_pmul((0, 1), cur), _pscale(prev, -1))
    if m == 0:
        cur = prev
    return _padd(cur, (2,))


@lru_cache(maxsize=None)
def cosine_minimal_polynomial(m: int) -> tuple[int, ...]:
    """Monic integer minimal polynomial of ``2cos(pi/m)``, lowest degree first.

    >>> cosine_minimal_polynomial(5)
    (-1, -1, 1)
    >>> cosine_minimal_polynomial(4)
    (-2, 0, 1)
    """
    if m < 1:
        raise ValueError("m must be positive")
    # conjugates are 2cos(k*pi/m) for odd k coprime to 2m
    conj = [2 * math.cos(k * math.pi / m) for k in range(1, 2 * m, 2)
            if math.gcd(k, 2 * m) == 1 and k < m]
    if not conj:
        conj = [2 * math.cos(math.pi / m)]
    poly = [1.0]
    for r in conj:
        nxt = [0.0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= r * c
        poly = nxt
    exact = tuple(int(round(c)) for c in poly)
    _, rem = _pdivmod(_chebyshev_relation(m), exact)
    if rem:
        raise ArithmeticError(f"minimal polynomial for m={m} failed exact check")
    return exact


class NumberField:
    """The real field ``Q(theta)`` with ``theta = 2cos(pi/m)``.

    Fields are cached per ``m`` so identity comparison is field equality.
    """

    _cache: dict[int, "NumberField"] = {}

    def __new__(cls, m: int):
        if m in cls._cache:
            return cls._cache[m]
        self = super().__new__(cls)
        self.m = m
        self.minpoly = tuple(Fraction(c) for c in cosine_minimal_polynomial(m))
        self.degree = len(self.minpoly) - 1
        self.lo, self.hi = self._isolate()
        cls._cache[m] = self
        return self

    def __reduce__(self):
        return (NumberField, (self.m,))

    def _isolate(self) -> tuple[Fraction, Fraction]:
        approx = 2 * math.cos(math.pi / self.m)
        width = Fraction(1, 8)
        while True:
            lo = Fraction(approx).limit_denominator(10**12) - width
            hi = lo + 2 * width
            if _sgn(_peval(self.minpoly, lo)) * _sgn(_peval(self.minpoly, hi)) < 0 \
                    and _sturm_count(self.minpoly, lo, hi) == 1:
                return lo, hi
            width /= 4

    def refine(self) -> None:
        mid = (self.lo + self.hi) / 2
        v = _peval(self.minpoly, mid)
        if v == 0:
            self.lo = self.hi = mid
        elif _sgn(v) == _sgn(_peval(self.minpoly, self.lo)):
            self.lo = mid
        else:
            self.hi = mid

    def gen(self) -> "AlgebraicScalar":
        return AlgebraicScalar(self, (0, 1))

    def __call__(self, x) -> "AlgebraicScalar":
        if isinstance(x, AlgebraicScalar):
            if x.field is not self:
                raise FieldMismatchError(f"{x.field} vs {self}")
            return x
        return AlgebraicScalar(self, (x,))

    def __repr__(self):
        return f"Q(2cos(pi/{self.m}))"


@lru_cache(maxsize=None)
def coxeter_field(m: int):
    """Field containing ``2cos(pi/m)``: ``None`` stands for the rationals."""
    if m in (2, 3, 4, 6):
        # crystallographic bonds admit integer Cartan entries
        return None
    return NumberField(m)


class AlgebraicScalar:
    """Element of a :class:`NumberField` stored as reduced coefficients."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: NumberField, coeffs: Iterable):
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) > field.degree:
            _, cs = _pdivmod(cs, field.minpoly)
        cs = _trim(cs)
        self.field = field
        self.coeffs = cs + (Fraction(0),) * (field.degree - len(cs))
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, AlgebraicScalar):
            if other.field is not self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return AlgebraicScalar(self.field, (other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraicScalar(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicScalar(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraicScalar(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicScalar(self.field, [a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraicScalar(self.field, _pmul(_trim(self.coeffs), _trim(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicScalar":
        a = _trim(self.coeffs)
        if not a:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid: s*a + t*minpoly = 1
        r0, r1 = tuple(self.field.minpoly), a
        s0, s1 = (), (Fraction(1),)
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _padd(s0, _pscale(_pmul(q, s1), -1))
        # r0 is a nonzero constant
        return AlgebraicScalar(self.field, _pscale(s0, 1 / Fraction(r0[0])))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = AlgebraicScalar(self.field, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, AlgebraicScalar):
            return other.field is self.field and other.coeffs == self.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.field.m, self.coeffs))
        return self._hash

    def sign(self) -> int:
        """Exact sign, by interval evaluation on a shrinking isolating interval."""
        cs = _trim(self.coeffs)
        if not cs:
            return 0
        if len(cs) == 1:
            return _sgn(cs[0])
        f = self.field
        while True:
            lo, hi = _interval_eval(cs, f.lo, f.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            f.refine()

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(_peval([float(c) for c in self.coeffs], 2 * math.cos(math.pi / self.field.m)))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*t^{i}" if i > 1 else f"{c}*t")
        body = " + ".join(terms) or "0"
        return f"<{body} in {self.field!r}>"


def _interval_eval(cs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    a, b = Fraction(0), Fraction(0)
    for c in reversed(cs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def sign(x) -> int:
    """Sign of an exact scalar (int, Fraction or AlgebraicScalar)."""
    if isinstance(x, AlgebraicScalar):
        return x.sign()
    return _sgn(x)


def is_zero(x) -> bool:
    if isinstance(x, AlgebraicScalar):
        return x.is_zero()
    return x == 0


def to_rational(x) -> Fraction:
    if isinstance(x, AlgebraicScalar):
        if not x.is_rational():
            raise ValueError(f"{x!r} is irrational")
        return x.coeffs[0]
    return Fraction(x)


# ---------------------------------------------------------------------------
# univariate polynomials with exact coefficients


class UniPoly:
    """Univariate polynomial with rational coefficients, lowest degree first.

    >>> t = UniPoly.variable("t")
    >>> p = (t - 1) * (t - 2)
    >>> p
    UniPoly('t', [2, -3, 1])
    >>> p(3), p.integer_roots()
    (Fraction(2, 1), [1, 2])
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        self.var = var
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def variable(cls, var: str = "t") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def constant(cls, c, var: str = "t") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "t") -> "UniPoly":
        """Monic polynomial prod (var - r)."""
        p = cls((1,), var)
        for r in roots:
            p = p * cls((-r, 1), var)
        return p

    @classmethod
    def interpolate(cls, points: Sequence[tuple], var: str = "t") -> "UniPoly":
        """Lagrange interpolation through exact points."""
        out = cls((), var)
        for i, (xi, yi) in enumerate(points):
            term = cls((yi,), var)
            for j, (xj, _) in enumerate(points):
                if j != i:
                    term = term * cls((Fraction(-xj, 1) / (xi - xj), Fraction(1) / (xi - xj)), var)
            out = out + term
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly((other,), self.var)

    def __add__(self, other):
        return UniPoly(_padd(self.coeffs, self._lift(other).coeffs), self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.var)
        return UniPoly(_pmul(self.coeffs, self._lift(other).coeffs), self.var)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, UniPoly):
            q, r = _pdivmod(self.coeffs, k.coeffs)
            if r:
                raise ArithmeticError("inexact polynomial division")
            return UniPoly(q, self.var)
        return UniPoly([c / Fraction(k) for c in self.coeffs], self.var)

    def __pow__(self, k: int):
        out = UniPoly((1,), self.var)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        q, r = _pdivmod(self.coeffs, other.coeffs)
        return UniPoly(q, self.var), UniPoly(r, self.var)

    def __call__(self, x):
        if isinstance(x, UniPoly):
            acc = UniPoly((), x.var)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        return _peval(self.coeffs, x)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def integer_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(int(c))
        return out

    def integer_roots(self) -> list[int]:
        """All roots, with multiplicity, assuming the polynomial splits over Z.

        Raises ``ValueError`` otherwise.
        """
        if not self.coeffs:
            raise ValueError("zero polynomial")
        rest = list(self.coeffs)
        roots: list[int] = []
        while len(rest) > 1 and rest[0] == 0:
            roots.append(0)
            rest = rest[1:]
        while len(rest) > 1:
            lead, const = rest[-1], rest[0]
            scaled = const / lead
            if scaled.denominator != 1:
                raise ValueError("polynomial does not split over the integers")
            n = abs(int(scaled))
            found = None
            for d in _divisors(n):
                for r in (d, -d):
                    if _peval(rest, r) == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is None:
                raise ValueError("polynomial does not split over the integers")
            roots.append(found)
            q, _ = _pdivmod(rest, (-found, 1))
            rest = list(q)
        return sorted(roots)

    def __repr__(self):
        return f"UniPoly({self.var!r}, [{', '.join(_fmt(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else self.var if i == 1 else f"{self.var}^{i}"
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = _fmt(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [0]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
