"""Dense exact linear algebra over a FieldSpec.

Matrices are lists of rows of raw field elements (``int`` residues or
``Fraction``).  Over prime fields the elimination kernels run vectorised on
``numpy`` int64 arrays; over Q they run on Python fractions.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .fieldpoly.field import FieldSpec
from .fieldpoly.matrix import berkowitz

Matrix = list


def coerce(a: Sequence[Sequence], F: FieldSpec) -> Matrix:
    return [[F(x) for x in row] for row in a]


def identity(n: int, F: FieldSpec) -> Matrix:
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def zeros(m: int, n: int, F: FieldSpec) -> Matrix:
    return [[F.zero] * n for _ in range(m)]


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def matmul(a: Matrix, b: Matrix, F: FieldSpec) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch {shape(a)} @ {shape(b)}")
    p = F.p
    cols = list(zip(*b)) if b else []
    out = []
    for row in a:
        r = []
        for col in cols:
            s = sum(x * y for x, y in zip(row, col) if x and y)
            r.append(s % p if p else F(s))
        out.append(r)
    return out


def add(a: Matrix, b: Matrix, F: FieldSpec) -> Matrix:
    return [[F.add(x, y) for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a: Matrix, b: Matrix, F: FieldSpec) -> Matrix:
    return [[F.sub(x, y) for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(a: Matrix, c, F: FieldSpec) -> Matrix:
    return [[F.mul(x, c) for x in r] for r in a]


def mat_pow(a: Matrix, k: int, F: FieldSpec) -> Matrix:
    result = identity(len(a), F)
    base = a
    while k:
        if k & 1:
            result = matmul(result, base, F)
        k >>= 1
        if k:
            base = matmul(base, base, F)
    return result


def is_zero(a: Matrix) -> bool:
    return all(not x for r in a for x in r)


def row_echelon(a: Matrix, F: FieldSpec) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m, n = shape(a)
    if F.p and m and n:
        return _rref_modp(a, F.p)
    r = [list(row) for row in a]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if r[i][col]), None)
        if piv is None:
            continue
        r[row], r[piv] = r[piv], r[row]
        inv = F.inv(r[row][col])
        r[row] = [F.mul(x, inv) for x in r[row]]
        for i in range(m):
            if i != row and r[i][col]:
                c = r[i][col]
                r[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(r[i], r[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return r, pivots


def _rref_modp(a: Matrix, p: int) -> tuple[Matrix, list[int]]:
    r = np.array(a, dtype=np.int64) % p
    m, n = r.shape
    pivots = []
    row = 0
    for col in range(n):
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = r[row] * inv % p
        factors = r[:, col].copy()
        factors[row] = 0
        nzr = np.nonzero(factors)[0]
        if nzr.size:
            r[nzr] = (r[nzr] - np.outer(factors[nzr], r[row])) % p
        pivots.append(col)
        row += 1
        if row == m:
            break
    return r.tolist(), pivots


def rank(a: Matrix, F: FieldSpec) -> int:
    if not a or not a[0]:
        return 0
    return len(row_echelon(a, F)[1])


def nullspace(a: Matrix, F: FieldSpec, ncols: int | None = None) -> list[list]:
    """Basis of ``{v : a v = 0}`` (one list per basis vector)."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return identity(n, F)
    r, pivots = row_echelon(a, F)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for fcol in free:
        v = [F.zero] * n
        v[fcol] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(F(r[i][fcol]))
        basis.append(v)
    return basis


def nullity(a: Matrix, F: FieldSpec, ncols: int | None = None) -> int:
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    return n - (rank(a, F) if a else 0)


def inverse(a: Matrix, F: FieldSpec) -> Matrix:
    n = len(a)
    aug = [list(row) + identity(n, F)[i] for i, row in enumerate(a)]
    r, pivots = row_echelon(aug, F)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [[F(x) for x in row[n:]] for row in r[:n]]


def solve_left(psi: Matrix, rhs: Matrix, F: FieldSpec) -> Matrix | None:
    """Unique ``B`` with ``psi @ B == rhs`` for full-column-rank ``psi``, else ``None``."""
    m, n = shape(psi)
    k = len(rhs[0]) if rhs else 0
    aug = [list(psi[i]) + list(rhs[i]) for i in range(m)]
    r, pivots = row_echelon(aug, F)
    if pivots[:n] != list(range(n)):
        return None
    if any(p >= n for p in pivots):
        return None
    return [[F(x) for x in r[i][n:n + k]] for i in range(n)]


def det(a: Matrix, F: FieldSpec):
    n = len(a)
    r = [list(row) for row in a]
    d = F.one
    for col in range(n):
        piv = next((i for i in range(col, n) if r[i][col]), None)
        if piv is None:
            return F.zero
        if piv != col:
            r[col], r[piv] = r[piv], r[col]
            d = F.neg(d)
        d = F.mul(d, r[col][col])
        inv = F.inv(r[col][col])
        for i in range(col + 1, n):
            if r[i][col]:
                c = F.mul(r[i][col], inv)
                r[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(r[i], r[col])]
    return d


def char_poly(a: Matrix, F: FieldSpec) -> list:
    """``[1, c_1, ..., c_n]`` with ``det(lam - a) = sum c_k lam^(n-k)``."""
    return berkowitz(a, F.zero, F.one, F.add, F.mul, F.neg)


def is_nilpotent_charpoly(a: Matrix, F: FieldSpec) -> bool:
    return not any(char_poly(a, F)[1:])


def random_matrix(rng: np.random.Generator, m: int, n: int, F: FieldSpec, bound: int = 5) -> Matrix:
    if F.p:
        return [[int(x) for x in row] for row in rng.integers(0, F.p, size=(m, n))]
    return [[F(int(x)) for x in row] for row in rng.integers(-bound, bound + 1, size=(m, n))]


def random_invertible(rng: np.random.Generator, n: int, F: FieldSpec) -> Matrix:
    while True:
        g = random_matrix(rng, n, n, F)
        if det(g, F):
            return g
