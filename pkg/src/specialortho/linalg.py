"""Dense exact linear algebra over the scalar field.

Small helper layer on top of scalars.solve_linear: reduced row echelon form,
rank, nullspace, determinants, and coordinates with respect to a fixed
independent spanning set.  Matrices are plain lists of lists of Frac.
"""

from __future__ import annotations

from typing import Sequence

from .errors import SingularMatrix
from .scalars import (
    _p_divexact,
    _p_int_mul,
    _p_lcm,
    _p_mul,
    _p_sub,
    _P_ONE,
    Frac,
    ONE,
    ZERO,
)

Matrix = list[list[Frac]]
Vector = list[Frac]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def transpose(m: Sequence[Sequence[Frac]]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_vec(m: Sequence[Sequence[Frac]], v: Sequence[Frac]) -> Vector:
    out = []
    for row in m:
        s = ZERO
        for a, b in zip(row, v):
            if a.num and b.num:
                s = s + a * b
        out.append(s)
    return out


def mat_mul(a: Sequence[Sequence[Frac]], b: Sequence[Sequence[Frac]]) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = ZERO
            for x, y in zip(row, col):
                if x.num and y.num:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c: Frac) -> Matrix:
    return [[c * x for x in row] for row in a]


def trace(m: Sequence[Sequence[Frac]]) -> Frac:
    s = ZERO
    for i, row in enumerate(m):
        s = s + row[i]
    return s


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rref(rows: Sequence[Sequence[Frac]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    R = [list(r) for r in rows]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if not R[i][c].is_zero()), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = R[r][c]
        if not inv.is_one():
            R[r] = [x / inv for x in R[r]]
        for i in range(m):
            if i != r and not R[i][c].is_zero():
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(rows: Sequence[Sequence[Frac]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Frac]]) -> list[Vector]:
    """Basis of the right kernel; one vector per free column, free entry = 1."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    R, pivots = rref(rows)
    pivot_set = set(pivots)
    out = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [ZERO] * n
        v[free] = ONE
        for r, c in enumerate(pivots):
            v[c] = -R[r][free]
        out.append(v)
    return out


def det(matrix: Sequence[Sequence[Frac]]) -> Frac:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return ONE
    rows = []
    den_product = _P_ONE
    for row in matrix:
        lcm = _P_ONE
        for f in row:
            if f.den != _P_ONE:
                lcm = _p_lcm(lcm, f.den)
        if lcm == _P_ONE:
            rows.append([f.num for f in row])
        else:
            rows.append([_p_mul(f.num, _p_divexact(lcm, f.den)) for f in row])
            den_product = _p_mul(den_product, lcm)
    sign = 1
    prev = _P_ONE
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if rows[r][k]), None)
        if piv is None:
            return ZERO
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                num = _p_sub(_p_mul(pk, rows[i][j]), _p_mul(rik, rows[k][j])) if rik else _p_mul(pk, rows[i][j])
                rows[i][j] = _p_divexact(num, prev) if prev != _P_ONE else num
        prev = pk
    return Frac(_p_int_mul(rows[n - 1][n - 1], sign), den_product)


class SubspaceCoords:
    """Coordinates with respect to a fixed independent list of vectors.

    Precomputes a transform T with T*A in reduced echelon form, where the
    columns of A are the basis vectors; express() is then one matrix-vector
    product plus a consistency check that the input lies in the span.
    """

    def __init__(self, basis: Sequence[Sequence[Frac]], label: str = ""):
        if not basis:
            raise SingularMatrix("empty basis")
        self.k = len(basis)
        self.n = len(basis[0])
        self.label = label
        aug = []
        for i in range(self.n):
            row = [basis[j][i] for j in range(self.k)]
            row.extend(ONE if t == i else ZERO for t in range(self.n))
            aug.append(row)
        R, pivots = rref(aug)
        if pivots[: self.k] != list(range(self.k)):
            raise SingularMatrix(f"dependent basis for {label or 'subspace'}")
        self.transform = [row[self.k :] for row in R]

    def express(self, v: Sequence[Frac]) -> Vector:
        w = mat_vec(self.transform, v)
        for r in range(self.k, self.n):
            if not w[r].is_zero():
                raise SingularMatrix(
                    f"vector outside {self.label or 'subspace'} span"
                )
        return w[: self.k]
