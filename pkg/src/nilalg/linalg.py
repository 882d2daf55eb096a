"""Exact linear algebra over the rationals.

Everything here works on tuples of ``fractions.Fraction`` so that ranks,
kernels and echelon forms are computed without rounding.  The central tool
is :class:`RowSpace`, an incremental reduced-row-echelon accumulator: rows
are inserted one at a time and the stored basis stays in canonical RREF,
so two equal row spaces always have identical representations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def is_zero_vector(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


class RowSpace:
    """Incremental reduced-row-echelon span of a set of rational rows."""

    def __init__(self, ncols: int, rows: Iterable[Sequence[Fraction]] = ()):
        self.ncols = ncols
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []
        for row in rows:
            self.add(row)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    def rows(self) -> Matrix:
        return tuple(tuple(r) for r in self._rows)

    def reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        """Residue of ``vec`` after elimination against the stored basis."""
        v = list(vec)
        for row, p in zip(self._rows, self._pivots):
            c = v[p]
            if c:
                for j in range(p, self.ncols):
                    v[j] -= c * row[j]
        return v

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return is_zero_vector(self.reduce(vec))

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert ``vec``; returns True iff it enlarged the span."""
        v = self.reduce(vec)
        pivot = next((j for j in range(self.ncols) if v[j] != 0), None)
        if pivot is None:
            return False
        inv = ONE / v[pivot]
        v = [c * inv for c in v]
        # Back-substitute into earlier rows to keep the basis fully reduced.
        for row in self._rows:
            c = row[pivot]
            if c:
                for j in range(pivot, self.ncols):
                    row[j] -= c * v[j]
        at = next((k for k, p in enumerate(self._pivots) if p > pivot),
                  len(self._pivots))
        self._rows.insert(at, v)
        self._pivots.insert(at, pivot)
        return True

    def coordinates(self, vec: Sequence[Fraction]) -> list[Fraction] | None:
        """Coefficients of ``vec`` in the stored basis, or None if outside."""
        coeffs = []
        v = list(vec)
        for row, p in zip(self._rows, self._pivots):
            c = v[p]
            coeffs.append(c)
            if c:
                for j in range(p, self.ncols):
                    v[j] -= c * row[j]
        if not is_zero_vector(v):
            return None
        return coeffs


def rank(rows: Iterable[Sequence[Fraction]], ncols: int) -> int:
    space = RowSpace(ncols)
    for row in rows:
        space.add(row)
    return space.dim


def mat_mul(a: Sequence[Sequence[Fraction]],
            b: Sequence[Sequence[Fraction]]) -> Matrix:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = [ZERO] * m
        for t in range(k):
            c = a[i][t]
            if c:
                brow = b[t]
                for j in range(m):
                    if brow[j]:
                        row[j] += c * brow[j]
        out.append(tuple(row))
    return tuple(out)


def mat_vec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v)) if v[j]), ZERO)
                 for row in a)


def row_times_mat(v: Sequence[Fraction],
                  a: Sequence[Sequence[Fraction]]) -> Vector:
    n = len(a[0]) if a else 0
    out = [ZERO] * n
    for i, c in enumerate(v):
        if c:
            row = a[i]
            for j in range(n):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def invert(m: Sequence[Sequence[Fraction]]) -> Matrix | None:
    """Exact inverse via Gauss-Jordan on [m | I]; None if singular."""
    n = len(m)
    aug = [list(m[i]) + list(unit_vector(n, i)) for i in range(n)]
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = ONE / aug[row][col]
        aug[row] = [c * inv for c in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[row])]
        row += 1
    return tuple(tuple(r[n:]) for r in aug)


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(zip(*m)) if m else ()
