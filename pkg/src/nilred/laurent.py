"""Matrix polynomials in ``t^-1``: the big cell, the functors Z_p and X,
the involution omega, companion models and the lattice operators T_{a,b}.

A ``MatrixPolynomial`` stores ``A_0, A_1, ..., A_D`` with ``A(t^-1) = sum A_i t^-i``.
Coefficients are raw field elements in nested lists (see ``linalg``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .fieldpoly import FieldSpec, PolyRing, RingMatrix, dense_coefficients
from .orbits import Partition
from .schemes import JordanOperator


def _freeze(m) -> tuple:
    return tuple(tuple(r) for r in m)


@dataclass(frozen=True)
class MatrixPolynomial:
    field: FieldSpec
    coefficients: tuple

    def __init__(self, field: FieldSpec, coefficients: Sequence):
        coeffs = [_freeze(linalg.coerce(c, field)) for c in coefficients]
        if not coeffs:
            raise ValueError("a matrix polynomial needs at least the constant coefficient")
        n = len(coeffs[0])
        if any(len(c) != n or any(len(r) != n for r in c) for c in coeffs):
            raise ValueError("coefficients must all be n x n")
        while len(coeffs) > 1 and linalg.is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "MatrixPolynomial":
        return cls(field, [linalg.identity(n, field)])

    @property
    def n(self) -> int:
        return len(self.coefficients[0])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> list:
        if i < len(self.coefficients):
            return [list(r) for r in self.coefficients[i]]
        return linalg.zeros(self.n, self.n, self.field)

    def is_big_cell(self) -> bool:
        return self.coefficient(0) == linalg.identity(self.n, self.field)

    def __mul__(self, other: "MatrixPolynomial") -> "MatrixPolynomial":
        F = self.field
        out = [linalg.zeros(self.n, self.n, F) for _ in range(self.degree + other.degree + 1)]
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = linalg.add(out[i + j], linalg.matmul(a, b, F), F)
        return MatrixPolynomial(F, out)

    def truncate(self, order: int) -> "MatrixPolynomial":
        return MatrixPolynomial(self.field, self.coefficients[:order + 1])

    def transpose(self) -> "MatrixPolynomial":
        return MatrixPolynomial(self.field, [linalg.transpose(c) for c in self.coefficients])

    def conjugate(self, g, g_inv) -> "MatrixPolynomial":
        F = self.field
        return MatrixPolynomial(F, [linalg.matmul(linalg.matmul(g, c, F), g_inv, F)
                                    for c in self.coefficients])

    def rescale(self, c) -> "MatrixPolynomial":
        """Substitute ``t^-1 -> c t^-1``."""
        F = self.field
        return MatrixPolynomial(F, [linalg.scale(m, F.pow(F(c), i), F)
                                    for i, m in enumerate(self.coefficients)])

    def inverse_series(self, order: int) -> "MatrixPolynomial":
        """Coefficients ``0..order`` of ``A^-1`` for ``A = 1 + N``, by Neumann recursion."""
        if not self.is_big_cell():
            raise ValueError("series inversion needs A_0 = identity")
        F = self.field
        inv = [linalg.identity(self.n, F)]
        for k in range(1, order + 1):
            acc = linalg.zeros(self.n, self.n, F)
            for i in range(1, min(k, self.degree) + 1):
                acc = linalg.sub(acc, linalg.matmul(self.coefficients[i], inv[k - i], F), F)
            inv.append(acc)
        return MatrixPolynomial(F, inv)

    def det_coefficients(self) -> list:
        """Dense coefficients of ``det A`` as a polynomial in ``s = t^-1``."""
        ring = PolyRing(["s"], self.field)
        s = ring.var("s")
        entries = [[ring.zero] * self.n for _ in range(self.n)]
        for k, c in enumerate(self.coefficients):
            sk = s**k
            for i in range(self.n):
                for j in range(self.n):
                    if c[i][j]:
                        entries[i][j] = entries[i][j] + sk.scale(c[i][j])
        d = RingMatrix(ring, entries).det()
        return dense_coefficients(d)[1] if d else [self.field.zero]

    def __str__(self):
        return format_matrix_polynomial(self)


def _format_matrix(m, F: FieldSpec) -> str:
    return "[" + ",".join("[" + ",".join(F.format(x) for x in r) + "]" for r in m) + "]"


def format_matrix_polynomial(A: MatrixPolynomial) -> str:
    F = A.field
    terms = []
    for i, c in enumerate(A.coefficients):
        if linalg.is_zero(c):
            continue
        if i == 0 and [list(r) for r in c] == linalg.identity(A.n, F):
            terms.append("1")
        else:
            terms.append(_format_matrix(c, F) + (f"*t^-{i}" if i else ""))
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^(\[\[.*\]\])(?:\*t\^-(\d+))?$")


def parse_matrix_polynomial(text: str, field: FieldSpec, n: int | None = None) -> MatrixPolynomial:
    """Read the text form ``1 + [[0,1],[0,0]]*t^-1``; ``n`` is needed when only ``1`` appears."""
    pieces = [p.strip() for p in re.split(r"\s\+\s", text.strip())]
    found: dict[int, list] = {}
    identity_term = False
    for piece in pieces:
        if piece == "1":
            identity_term = True
            continue
        if piece == "0":
            continue
        m = _TERM.match(piece)
        if not m:
            raise ValueError(f"cannot read term {piece!r}")
        rows = re.findall(r"\[([^\[\]]*)\]", m.group(1))
        mat = [[field(x.strip()) for x in r.split(",")] for r in rows]
        k = int(m.group(2) or 0)
        found[k] = linalg.add(found[k], mat, field) if k in found else mat
    if found:
        size = len(next(iter(found.values())))
    elif n is not None:
        size = n
    else:
        raise ValueError("size of a bare identity is ambiguous; pass n")
    if identity_term:
        found[0] = linalg.add(found.get(0, linalg.zeros(size, size, field)),
                              linalg.identity(size, field), field)
    top = max(found, default=0)
    return MatrixPolynomial(field, [found.get(k, linalg.zeros(size, size, field)) for k in range(top + 1)])


def _require_big_cell(A: MatrixPolynomial):
    if not A.is_big_cell():
        raise ValueError("expected A_0 = identity")


def z_membership(A: MatrixPolynomial, p: int) -> bool:
    """``A`` lies in Z_p: degree at most ``p`` and ``det A = 1``."""
    _require_big_cell(A)
    if A.degree > p:
        return False
    det = A.det_coefficients()
    return det[0] == A.field.one and not any(det[1:])


def x_membership(A: MatrixPolynomial) -> bool:
    """``A = 1 + C t^-1 + ... + C^(n-1) t^-(n-1)`` with ``char_poly(C) = lam^n``."""
    _require_big_cell(A)
    F, n = A.field, A.n
    if A.degree > n - 1:
        return False
    C = A.coefficient(1)
    if not linalg.is_nilpotent_charpoly(C, F):
        return False
    return all(A.coefficient(i) == linalg.mat_pow(C, i, F) for i in range(2, n))


def ch_inverse(C, field: FieldSpec) -> MatrixPolynomial:
    """``(1 - C t^-1)^-1 = 1 + C t^-1 + ... + C^(n-1) t^-(n-1)`` for ``C`` with char poly ``lam^n``."""
    C = linalg.coerce(C, field)
    n = len(C)
    if not linalg.is_nilpotent_charpoly(C, field):
        raise ValueError("char_poly(C) is not lam^n")
    result = MatrixPolynomial(field, [linalg.mat_pow(C, i, field) for i in range(n)])
    left = MatrixPolynomial(field, [linalg.identity(n, field), linalg.scale(C, -1, field)])
    assert left * result == MatrixPolynomial.identity(n, field)
    return result


def antidiagonal(n: int, field: FieldSpec) -> list:
    """``J`` with entry ``(-1)^j`` in column ``j``, row ``n + 1 - j`` (1-based)."""
    J = linalg.zeros(n, n, field)
    for j in range(1, n + 1):
        J[n - j][j - 1] = field((-1) ** j)
    return J


def omega(A: MatrixPolynomial, out_order: int | None = None, exact: bool = False) -> MatrixPolynomial:
    """``J A((-1)^n t^-1)^{-T} J^-1`` as a series truncated at ``out_order``.

    With ``exact=True`` the truncation must already be the whole answer,
    checked by multiplying back; inputs in X are always treated this way.
    """
    _require_big_cell(A)
    F, n = A.field, A.n
    order = n * A.degree + 1 if out_order is None else out_order
    in_x = x_membership(A)
    if in_x:
        exact = True
        order = max(order, 1)
    twisted = A.rescale((-1) ** n)
    inv = twisted.inverse_series(order)
    if exact and twisted * inv != MatrixPolynomial.identity(n, F):
        raise ValueError(f"inverse is not a polynomial of degree <= {order}")
    J = antidiagonal(n, F)
    result = inv.transpose().conjugate(J, linalg.inverse(J, F))
    if in_x:
        assert result.degree <= 1
    return result


def companion_matrix(A: MatrixPolynomial, p: int) -> list:
    """Block companion matrix: first block row ``-A_1 .. -A_p``, identities below the diagonal."""
    F, n = A.field, A.n
    size = p * n
    C = linalg.zeros(size, size, F)
    for blk in range(p):
        Ai = A.coefficient(blk + 1)
        for i in range(n):
            for j in range(n):
                C[i][blk * n + j] = F.neg(Ai[i][j])
    for blk in range(1, p):
        for i in range(n):
            C[blk * n + i][(blk - 1) * n + i] = F.one
    return C


def reversed_det_coefficients(A: MatrixPolynomial, p: int) -> list:
    """``[1, c_1, ..., c_pn]`` of ``lam^(pn) det A(lam^-1)``, highest power first."""
    det = A.det_coefficients()
    F = A.field
    return [det[k] if k < len(det) else F.zero for k in range(p * A.n + 1)]


def companion_model(A: MatrixPolynomial, p: int, check_z: bool = True):
    """Companion matrix of ``A`` with its characteristic polynomial in ``lam``."""
    _require_big_cell(A)
    if A.degree > p:
        raise ValueError(f"degree {A.degree} exceeds p = {p}")
    if check_z and not z_membership(A, p):
        raise ValueError("A is not in Z_p")
    F = A.field
    C = companion_matrix(A, p)
    chi = linalg.char_poly(C, F)
    assert chi == reversed_det_coefficients(A, p)
    ring = PolyRing(["lam"], F)
    lam = ring.var("lam")
    size = len(chi) - 1
    poly = ring.zero
    for k, c in enumerate(chi):
        if c:
            poly = poly + (lam ** (size - k)).scale(c)
    return C, poly


@dataclass(frozen=True)
class LatticeOperatorSpec:
    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 1 or self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise ValueError(f"need n >= 1, a, b >= 0 and a + b >= 1: {self}")

    def basis(self) -> list[tuple[int, int]]:
        """``(i, k)`` labels of ``t^k eps_i``: ``i`` ascending, ``k`` descending from ``a-1`` to ``-b``."""
        return [(i, k) for i in range(1, self.n + 1) for k in range(self.a - 1, -self.b - 1, -1)]


def lattice_nilpotent(spec: LatticeOperatorSpec) -> JordanOperator:
    """Multiplication by ``t`` on ``t^-b L_0 / t^a L_0`` in the monomial basis."""
    basis = spec.basis()
    pos = {lab: j for j, lab in enumerate(basis)}
    size = len(basis)
    m = [[0] * size for _ in range(size)]
    for j, (i, k) in enumerate(basis):
        if k + 1 < spec.a:
            m[pos[(i, k + 1)]][j] = 1
    op = JordanOperator(Partition((spec.a + spec.b,) * spec.n), tuple(tuple(r) for r in m))
    assert op == JordanOperator.of_type(op.partition)
    return op


def nilpotent_matrices(n: int, field: FieldSpec) -> Iterator[list]:
    """All ``n x n`` matrices over a prime field with char poly ``lam^n`` (brute force)."""
    if not field.p:
        raise ValueError("enumeration needs a finite field")
    for flat in itertools.product(range(field.p), repeat=n * n):
        C = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if linalg.is_nilpotent_charpoly(C, field):
            yield C


def x_points(n: int, field: FieldSpec) -> list[MatrixPolynomial]:
    return [ch_inverse(C, field) for C in nilpotent_matrices(n, field)]


def z1_points(n: int, field: FieldSpec) -> list[MatrixPolynomial]:
    """Every ``1 + B t^-1`` over a prime field with determinant 1 (brute force)."""
    out = []
    for flat in itertools.product(range(field.p), repeat=n * n):
        B = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        A = MatrixPolynomial(field, [linalg.identity(n, field), B])
        if z_membership(A, 1):
            out.append(A)
    return out
