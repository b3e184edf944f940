"""Exact rational linear algebra on small dense matrices.

Matrices are tuples of tuples of Fraction (row major), vectors are tuples
of Fraction.  Everything here is deterministic: pivots are always the
first nonzero entry scanning left to right, rows are processed in order.
"""
from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class CapError(RuntimeError):
    """A configured size/depth cap would be exceeded."""


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(entries) -> tuple:
    return tuple(frac(x) for x in entries)


def mat(rows) -> tuple:
    return tuple(vec(r) for r in rows)


def zero_vec(n) -> tuple:
    return (ZERO,) * n


def zero_mat(n, m=None) -> tuple:
    m = n if m is None else m
    return tuple((ZERO,) * m for _ in range(n))


def identity(n) -> tuple:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


def is_zero_mat(m) -> bool:
    return all(is_zero_vec(r) for r in m)


def vec_add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v) -> tuple:
    return tuple(c * a for a in v)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def mat_vec(m, v) -> tuple:
    return tuple(dot(row, v) for row in m)


def vec_mat(v, m) -> tuple:
    """Row vector times matrix."""
    n = len(m[0]) if m else 0
    return tuple(sum((v[i] * m[i][j] for i in range(len(v))), ZERO) for j in range(n))


def mat_mul(a, b) -> tuple:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_add(a, b) -> tuple:
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_scale(c, a) -> tuple:
    return tuple(vec_scale(c, r) for r in a)


def transpose(m) -> tuple:
    if not m:
        return ()
    return tuple(zip(*m))


def kron(a, b) -> tuple:
    """Kronecker product, row-major block layout."""
    if not a or not b:
        return ()
    return tuple(
        tuple(a[i][j] * b[k][l] for j in range(len(a[0])) for l in range(len(b[0])))
        for i in range(len(a))
        for k in range(len(b))
    )


def vec_kron(u, v) -> tuple:
    return tuple(a * b for a in u for b in v)


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace."""

    def __init__(self):
        self.rows = []
        self.pivots = []

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                c = v[p]
                for j in range(p, len(v)):
                    v[j] -= c * row[j]
        return v

    def add(self, v) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        v = self._reduce(v)
        p = next((j for j, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [x * inv for x in v]
        # back-substitute into existing rows
        for i, row in enumerate(self.rows):
            if row[p] != 0:
                c = row[p]
                self.rows[i] = [a - c * b for a, b in zip(row, v)]
        idx = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(idx, v)
        self.pivots.insert(idx, p)
        return True

    def contains(self, v) -> bool:
        return all(x == 0 for x in self._reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self):
        return [tuple(r) for r in self.rows]


def rank(rows) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.basis(), list(e.pivots)


def solve(a_rows, b):
    """Solve A x = b exactly; A given by rows.  Returns x or None.

    When the system is underdetermined the free variables are set to zero.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [list(a_rows[i]) + [frac(b[i])] for i in range(m)]
    basis, pivots = rref(aug)
    x = [ZERO] * n
    for row, p in zip(basis, pivots):
        if p == n:
            return None  # inconsistent: pivot in the augmented column
        x[p] = row[n]
    return tuple(x)
