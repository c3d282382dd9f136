"""Matrices with polynomial entries, determinants and characteristic polynomials."""

from __future__ import annotations

from typing import Callable, Sequence

from .ring import PolyRing, Polynomial


class NotDivisible(ArithmeticError):
    pass


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return ``f / g``, raising :class:`NotDivisible` if ``g`` does not divide ``f``."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    F = ring.field
    if g.is_constant():
        return f.scale(F.inv(g.constant_coefficient()))
    glm, ginv = g.lm, F.inv(g.lc)
    q: dict = {}
    r = f
    while r:
        m = r.lm
        if not ring.mono_divides(glm, m):
            raise NotDivisible(f"{g} does not divide {f}")
        c = F.mul(r.lc, ginv)
        shift = m - glm
        q[shift] = c
        r = r - g.mul_term(shift, c)
    return Polynomial(ring, q)


class RingMatrix:
    """A rectangular matrix over a polynomial ring (immutable)."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: PolyRing, rows: Sequence[Sequence]):
        self.ring = ring
        conv = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, Polynomial):
                    r.append(x if x.ring == ring else ring.convert(x))
                else:
                    r.append(ring.const(x))
            conv.append(tuple(r))
        self.rows = tuple(conv)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, ring: PolyRing, n: int) -> "RingMatrix":
        return cls(ring, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: PolyRing, m: int, n: int) -> "RingMatrix":
        return cls(ring, [[0] * n for _ in range(m)])

    @classmethod
    def symbolic(cls, ring: PolyRing, prefix: str, m: int, n: int) -> "RingMatrix":
        """Matrix of ring variables ``<prefix>_i_j`` (1-based)."""
        return cls(ring, [[ring.var(f"{prefix}_{i + 1}_{j + 1}") for j in range(n)] for i in range(m)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [x for row in self.rows for x in row]

    def map(self, fn: Callable[[Polynomial], Polynomial], ring: PolyRing | None = None) -> "RingMatrix":
        return RingMatrix(ring or self.ring, [[fn(x) for x in row] for row in self.rows])

    def to_ring(self, ring: PolyRing) -> "RingMatrix":
        return RingMatrix(ring, [[ring.convert(x) for x in row] for row in self.rows])

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.ring, list(zip(*self.rows)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RingMatrix":
        return RingMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check_shape(other)
        return RingMatrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._check_shape(other)
        return RingMatrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "RingMatrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "RingMatrix":
        return self.map(lambda x: x * c)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.ring.zero
        cols = list(zip(*other.rows)) if other.rows else [()] * n
        out = []
        for row in self.rows:
            r = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                r.append(acc)
            out.append(r)
        return RingMatrix(self.ring, out)

    def __pow__(self, k: int) -> "RingMatrix":
        n, n2 = self.shape
        if n != n2:
            raise ValueError("power of a non-square matrix")
        result = RingMatrix.identity(self.ring, n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        return isinstance(other, RingMatrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def evaluate(self, point) -> list[list]:
        return [[x.evaluate(point) for x in row] for row in self.rows]

    def det(self) -> Polynomial:
        """Determinant by fraction-free (Bareiss) elimination."""
        n, n2 = self.shape
        if n != n2:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det([list(r) for r in self.rows], self.ring)

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows) + "]"

    __repr__ = __str__


def bareiss_det(a: list[list[Polynomial]], ring: PolyRing) -> Polynomial:
    n = len(a)
    if n == 0:
        return ring.one
    a = [row[:] for row in a]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = akk * a[i][j]
                if aik and a[k][j]:
                    num = num - aik * a[k][j]
                a[i][j] = exact_divide(num, prev) if num else num
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def cofactor_det(a: Sequence[Sequence[Polynomial]], ring: PolyRing) -> Polynomial:
    """Laplace expansion along the first row (exponential; for cross-checks only)."""
    n = len(a)
    if n == 0:
        return ring.one
    if n == 1:
        return a[0][0]
    total = ring.zero
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            t = a[0][j] * cofactor_det(minor, ring)
            total = total + t if j % 2 == 0 else total - t
    return total


def berkowitz(a: Sequence[Sequence], zero, one, add, mul, neg) -> list:
    """Division-free characteristic polynomial coefficients.

    Returns ``[1, c_1, ..., c_n]`` with ``det(lam*I - a) = sum c_k lam^(n-k)``.
    The ring operations are passed in so the routine serves both polynomial
    and plain field matrices.
    """
    n = len(a)
    vect = [one]
    for k in range(n - 1, -1, -1):
        m = n - 1 - k
        akk = a[k][k]
        row = [a[k][j] for j in range(k + 1, n)]
        col = [a[i][k] for i in range(k + 1, n)]
        sub = [[a[i][j] for j in range(k + 1, n)] for i in range(k + 1, n)]
        q = [one, neg(akk)]
        v = col
        for _ in range(m):
            s = zero
            for x, y in zip(row, v):
                s = add(s, mul(x, y))
            q.append(neg(s))
            v = [_dot(r, v, zero, add, mul) for r in sub]
        new = []
        for i in range(m + 2):
            s = zero
            for j in range(min(i, m) + 1):
                if i - j < len(q):
                    s = add(s, mul(q[i - j], vect[j]))
            new.append(s)
        vect = new
    return vect


def _dot(r, v, zero, add, mul):
    s = zero
    for x, y in zip(r, v):
        s = add(s, mul(x, y))
    return s


def char_poly_coefficients(M: RingMatrix) -> list[Polynomial]:
    """``[1, c_1, ..., c_n]`` with ``det(lam - M) = lam^n + c_1 lam^(n-1) + ... + c_n``."""
    n, n2 = M.shape
    if n != n2:
        raise ValueError("characteristic polynomial of a non-square matrix")
    ring = M.ring
    return berkowitz(M.rows, ring.zero, ring.one, lambda x, y: x + y, lambda x, y: x * y, lambda x: -x)


def char_poly(M: RingMatrix, var: str = "lam") -> Polynomial:
    """``det(var*I - M)`` as a polynomial in ``M.ring`` extended by the fresh variable ``var``."""
    if var in M.ring.index:
        raise ValueError(f"{var!r} is already a variable of the ring")
    coeffs = char_poly_coefficients(M)
    big = M.ring.extend([var])
    lam = big.var(var)
    n = len(coeffs) - 1
    total = big.zero
    for k, c in enumerate(coeffs):
        if c:
            total = total + big.convert(c) * lam ** (n - k)
    return total
