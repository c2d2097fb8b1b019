"""Small exact linear algebra over the scalar types of :mod:`coxcat.scalars`.

Vectors are tuples, matrices are lists of rows.  Nothing here is fast; the
matrices involved have at most a few dozen rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import is_zero


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


class Echelon:
    """Reduced row echelon basis of a span, for membership and coordinates."""

    def __init__(self, vectors: Sequence[Sequence]):
        self.rows: list[list] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def reduce(self, v: Sequence) -> list:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if not is_zero(v[p]):
                k = v[p]
                v = [a - k * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; returns False when it was already in the span."""
        r = self.reduce(v)
        p = next((i for i, a in enumerate(r) if not is_zero(a)), None)
        if p is None:
            return False
        inv = _div(1, r[p])
        r = [a * inv for a in r]
        for i, row in enumerate(self.rows):
            if not is_zero(row[p]):
                k = row[p]
                self.rows[i] = [a - k * b for a, b in zip(row, r)]
        self.rows.append(r)
        self.pivots.append(p)
        return True

    def contains(self, v: Sequence) -> bool:
        return all(is_zero(a) for a in self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(vectors: Sequence[Sequence]) -> int:
    return Echelon(vectors).rank


def coordinates(basis: Sequence[Sequence], v: Sequence) -> list | None:
    """Coefficients ``x`` with ``sum x_i basis_i = v``, or None when ``v`` is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if all(is_zero(a) for a in v) else None
    dim = len(v)
    # augmented system, columns are the basis vectors
    rows = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(dim)]
    pivots = []
    r = 0
    for col in range(k):
        pr = next((i for i in range(r, dim) if not is_zero(rows[i][col])), None)
        if pr is None:
            raise ValueError("basis is not linearly independent")
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = _div(1, rows[r][col])
        rows[r] = [a * inv for a in rows[r]]
        for i in range(dim):
            if i != r and not is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(not is_zero(rows[i][k]) for i in range(r, dim)):
        return None
    return [rows[i][k] for i in range(k)]


# rational matrices ---------------------------------------------------------


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def matpow(a: Sequence[Sequence], k: int) -> list[list]:
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        pr = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if pr is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[pr] = rows[pr], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return [row[n:] for row in rows]


def diag(entries: Sequence) -> list[list]:
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
