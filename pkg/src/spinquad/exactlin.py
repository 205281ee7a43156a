"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples holding Python ints, so nothing ever
overflows.  The two normal forms used throughout the package:

* Smith form ``U @ B @ V == D`` with ``D`` diagonal, positive and
  satisfying ``d_i | d_{i+1}``.
* Column Hermite form ``B @ C == H`` with ``H`` upper triangular, positive
  diagonal and off-diagonal entries of row ``i`` reduced into
  ``[0, H[i][i])``.  Coset normal forms and enumeration rely on exactly
  this convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DimensionMismatch, SingularMatrix

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if any(len(row) != len(m[0]) for row in m):
        raise DimensionMismatch("matrix rows have different lengths")
    return m


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def matmul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    if a and len(a[0]) != len(v):
        raise DimensionMismatch(f"matrix has {len(a[0])} columns, vector has {len(v)} entries")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    V: IntMatrix
    D: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        return tuple(self.D[i][i] for i in range(len(self.D)))


@dataclass(frozen=True)
class HermiteBasis:
    H: IntMatrix
    C: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        return tuple(self.H[i][i] for i in range(len(self.H)))

    @property
    def index(self) -> int:
        """Index of the lattice in Z^n, i.e. |det|."""
        out = 1
        for d in self.diagonal:
            out *= d
        return out


def _require_nonsingular(b: IntMatrix) -> None:
    if any(len(row) != len(b) for row in b):
        raise DimensionMismatch("matrix must be square")
    if determinant(b) == 0:
        raise SingularMatrix("matrix is singular (determinant 0)")


def smith(b: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form of a nonsingular square matrix.

    Pivot is the nonzero entry of least magnitude in the active block,
    ties broken by lowest row and then lowest column.
    """
    b = as_matrix(b)
    _require_nonsingular(b)
    n = len(b)
    a = [list(row) for row in b]
    u = [list(row) for row in identity(n)]
    v = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for m in (a, v):
            for row in m:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        for m in (a, u):
            rd, rs = m[dst], m[src]
            for k in range(n):
                rd[k] += q * rs[k]

    def add_col(dst, src, q):
        for m in (a, v):
            for row in m:
                row[dst] += q * row[src]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            for m in (a, u):
                m[t] = [-x for x in m[t]]

    return SmithDecomposition(
        U=tuple(map(tuple, u)), V=tuple(map(tuple, v)), D=tuple(map(tuple, a))
    )


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = x*a + y*b = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite(b: Sequence[Sequence[int]]) -> HermiteBasis:
    """Column Hermite normal form: ``B @ C == H``, H upper triangular."""
    b = as_matrix(b)
    _require_nonsingular(b)
    n = len(b)
    # work on columns: cols[j] is column j of the running H (and of C)
    h = [list(col) for col in transpose(b)]
    c = [list(col) for col in identity(n)]

    def combine(i, j, x, y, p, q):
        # col_i, col_j <- x*col_i + y*col_j, p*col_i + q*col_j
        for m in (h, c):
            ci, cj = m[i], m[j]
            m[i] = [x * s + y * t for s, t in zip(ci, cj)]
            m[j] = [p * s + q * t for s, t in zip(ci, cj)]

    for i in range(n - 1, -1, -1):
        for j in range(i):
            bij = h[j][i]
            if bij == 0:
                continue
            aii = h[i][i]
            g, x, y = _xgcd(aii, bij)
            combine(i, j, x, y, -bij // g, aii // g)
        if h[i][i] < 0:
            h[i] = [-s for s in h[i]]
            c[i] = [-s for s in c[i]]
    for i in range(n - 1, -1, -1):
        piv = h[i][i]
        for j in range(i + 1, n):
            q = h[j][i] // piv
            if q:
                h[j] = [s - q * t for s, t in zip(h[j], h[i])]
                c[j] = [s - q * t for s, t in zip(c[j], c[i])]

    return HermiteBasis(H=transpose(tuple(map(tuple, h))), C=transpose(tuple(map(tuple, c))))


def inverse_rational(b: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    b = as_matrix(b)
    _require_nonsingular(b)
    n = len(b)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def coset_normal_form(v: Sequence[int], basis: HermiteBasis) -> IntVector:
    """Canonical representative of ``v`` modulo the column lattice of ``basis``."""
    H = basis.H
    if len(v) != len(H):
        raise DimensionMismatch(f"vector of length {len(v)} against rank {len(H)} lattice")
    w = [int(x) for x in v]
    for i in range(len(w) - 1, -1, -1):
        q = w[i] // H[i][i]
        if q:
            for r in range(i + 1):
                w[r] -= q * H[r][i]
    return tuple(w)


def in_lattice(v: Sequence[int], basis: HermiteBasis) -> bool:
    return not any(coset_normal_form(v, basis))


def coset_enumerate(basis: HermiteBasis) -> Iterator[IntVector]:
    """All normal-form coset representatives, in lexicographic order."""
    return itertools.product(*(range(d) for d in basis.diagonal))
