"""Ideals of the schemes N_{n,e}, of invariant-plane charts, and of the
intertwining scheme, plus the map phi and Zariski tangent dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import linalg
from .exterior import minors_substitution, plucker_ring, shuffle_linear_forms
from .fieldpoly import FieldSpec, PolyRing, RingMatrix, char_poly_coefficients
from .groebner import Ideal
from .orbits import Partition, jordan_matrix


@dataclass(frozen=True)
class NilpotentSchemeSpec:
    n: int
    e: int

    def __post_init__(self):
        if not 1 <= self.e <= self.n:
            raise ValueError(f"need 1 <= e <= n, got n={self.n}, e={self.e}")


@dataclass(frozen=True)
class JordanOperator:
    """A nilpotent operator in standard Jordan form (upper-shift blocks)."""

    partition: Partition
    matrix: tuple

    @classmethod
    def of_type(cls, parts) -> "JordanOperator":
        sigma = Partition(parts)
        return cls(sigma, tuple(tuple(r) for r in jordan_matrix(sigma)))

    @property
    def N(self) -> int:
        return len(self.matrix)

    @property
    def blocks(self) -> int:
        return len(self.partition)

    @property
    def nilpotency(self) -> int:
        return self.partition.largest

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]

    def ring_matrix(self, ring: PolyRing) -> RingMatrix:
        return RingMatrix(ring, self.matrix)


@dataclass(frozen=True)
class Chart:
    """The affine chart of Gr(n, k^N) where the rows ``S`` (1-based) form an identity block."""

    N: int
    n: int
    S: tuple

    def __post_init__(self):
        S = tuple(sorted(self.S))
        if len(S) != self.n or len(set(S)) != self.n or not all(1 <= s <= self.N for s in S):
            raise ValueError(f"bad pivot rows {self.S} for Gr({self.n}, {self.N})")
        object.__setattr__(self, "S", S)

    @property
    def free_rows(self) -> list[int]:
        return [i for i in range(1, self.N + 1) if i not in self.S]

    def variables(self) -> list[str]:
        return [f"x_{i}_{j}" for i in self.free_rows for j in range(1, self.n + 1)]


def charts(N: int, n: int) -> list[Chart]:
    return [Chart(N, n, S) for S in combinations(range(1, N + 1), n)]


def matrix_variables(n: int, prefix: str = "a", m: int | None = None) -> list[str]:
    m = n if m is None else m
    return [f"{prefix}_{i}_{j}" for i in range(1, m + 1) for j in range(1, n + 1)]


def _as_operator(T) -> JordanOperator:
    if isinstance(T, JordanOperator):
        return T
    return JordanOperator.of_type(T)


def nilpotent_scheme_generators(A: RingMatrix, e: int) -> list:
    """Entries of ``A^e`` and the non-leading coefficients of ``det(lam - A)``."""
    power = A**e
    coeffs = char_poly_coefficients(A)[1:]
    return [x for x in power.entries() if x] + [c for c in coeffs if c]


def nilpotent_scheme_ideal(spec: NilpotentSchemeSpec, field: FieldSpec) -> Ideal:
    """Ideal of ``{A : A^e = 0, det(lam - A) = lam^n}`` in ``k[a_i_j]``."""
    ring = PolyRing(matrix_variables(spec.n), field)
    A = RingMatrix.symbolic(ring, "a", spec.n, spec.n)
    return Ideal(ring, tuple(nilpotent_scheme_generators(A, spec.e)))


def chart_ring(chart: Chart, field: FieldSpec) -> PolyRing:
    return PolyRing(chart.variables(), field)


def chart_matrix(chart: Chart, ring: PolyRing) -> RingMatrix:
    """``N x n`` matrix: identity on rows ``S``, variable ``x_i_j`` in free row ``i``."""
    rows = []
    for i in range(1, chart.N + 1):
        if i in chart.S:
            k = chart.S.index(i)
            rows.append([int(j == k) for j in range(chart.n)])
        else:
            rows.append([ring.var(f"x_{i}_{j}") for j in range(1, chart.n + 1)])
    return RingMatrix(ring, rows)


def _chart_restriction(T: JordanOperator, chart: Chart, ring: PolyRing):
    if T.N != chart.N:
        raise ValueError(f"operator acts on k^{T.N}, chart lives in Gr({chart.n}, k^{chart.N})")
    M = chart_matrix(chart, ring)
    TM = T.ring_matrix(ring) @ M
    S0 = [s - 1 for s in chart.S]
    B = TM.submatrix(S0, range(chart.n))
    return M, TM, B


def restricted_operator(T, chart: Chart, field: FieldSpec) -> RingMatrix:
    """``B = (T M)_S``, the matrix of ``T`` on the chart's universal plane."""
    T = _as_operator(T)
    return _chart_restriction(T, chart, chart_ring(chart, field))[2]


def invariance_only_chart_ideal(T, chart: Chart, field: FieldSpec) -> Ideal:
    """Only the invariance equations ``(T M - M B)`` on the free rows."""
    T = _as_operator(T)
    ring = chart_ring(chart, field)
    M, TM, B = _chart_restriction(T, chart, ring)
    D = TM - M @ B
    gens = [D[i - 1, j] for i in chart.free_rows for j in range(chart.n)]
    return Ideal(ring, tuple(gens))


def invariant_chart_ideal(T, chart: Chart, field: FieldSpec) -> Ideal:
    """Invariant planes with ``det(lam - T|_U) = lam^n``, on one chart."""
    T = _as_operator(T)
    inv = invariance_only_chart_ideal(T, chart, field)
    B = restricted_operator(T, chart, field)
    coeffs = [c for c in char_poly_coefficients(B)[1:] if c]
    return Ideal(inv.ring, inv.generators + tuple(coeffs))


def shuffle_chart_ideal(T, chart: Chart, field: FieldSpec) -> Ideal:
    """Shuffle forms pulled back along ``p_J -> minor_J(chart matrix)``."""
    T = _as_operator(T)
    ring = chart_ring(chart, field)
    if T.N != chart.N:
        raise ValueError(f"operator acts on k^{T.N}, chart lives in Gr({chart.n}, k^{chart.N})")
    pring = plucker_ring(chart.N, chart.n, field)
    forms = shuffle_linear_forms(T.rows(), chart.n, field, ring=pring)
    minors = minors_substitution(chart_matrix(chart, ring), pring)
    gens = []
    for form in forms:
        g = ring.zero
        for exps, c in form.terms():
            (k,) = [i for i, e in enumerate(exps) if e]
            g = g + minors[pring.variables[k]].scale(c)
        gens.append(g)
    return Ideal(ring, tuple(gens))


def vee_scheme_ideal(spec: NilpotentSchemeSpec, T, field: FieldSpec) -> Ideal:
    """Pairs ``(A, Psi)`` with ``A`` in N_{n,e} and ``T Psi = Psi A``."""
    T = _as_operator(T)
    if T.nilpotency != spec.e or len(set(T.partition)) != 1:
        raise ValueError(f"expected T of type (e^blocks) with e={spec.e}, got {T.partition}")
    n, N = spec.n, T.N
    ring = PolyRing(matrix_variables(n) + matrix_variables(n, "psi", N), field)
    A = RingMatrix.symbolic(ring, "a", n, n)
    Psi = RingMatrix.symbolic(ring, "psi", N, n)
    gens = nilpotent_scheme_generators(A, spec.e)
    gens += (T.ring_matrix(ring) @ Psi - Psi @ A).entries()
    return Ideal(ring, tuple(gens))


def phi(T, psi: Sequence[Sequence], field: FieldSpec) -> list[list]:
    """The unique ``B`` with ``psi B = T psi``: the matrix of ``T`` on the span of ``psi``."""
    T = _as_operator(T)
    psi = linalg.coerce(psi, field)
    N, n = linalg.shape(psi)
    if linalg.rank(psi, field) != n:
        raise ValueError("psi is rank deficient")
    Tpsi = linalg.matmul(linalg.coerce(T.rows(), field), psi, field)
    B = linalg.solve_left(psi, Tpsi, field)
    if B is None or linalg.matmul(psi, B, field) != Tpsi:
        raise ValueError("the column span of psi is not T-invariant")
    assert linalg.is_zero(linalg.mat_pow(B, T.nilpotency, field))
    assert linalg.is_nilpotent_charpoly(B, field)
    return B


@lru_cache(maxsize=64)
def _jacobian(ideal: Ideal):
    return [[g.diff(v) for v in ideal.ring.variables] for g in ideal.generators]


def jacobian_at(ideal: Ideal, point) -> list[list]:
    return [[d.evaluate(point) for d in row] for row in _jacobian(ideal)]


def tangent_dim(ideal: Ideal, point) -> int:
    """Dimension of the Zariski tangent space at ``point`` (nullity of the Jacobian)."""
    ring = ideal.ring
    F = ring.field
    if isinstance(point, dict):
        point = [F(point[v]) for v in ring.variables]
    else:
        point = [F(x) for x in point]
    bad = [g for g in ideal.generators if g.evaluate(point)]
    if bad:
        raise ValueError(f"point is not on the scheme: {bad[0]} does not vanish")
    if not ideal.generators:
        return ring.nvars
    return linalg.nullity(jacobian_at(ideal, point), F, ring.nvars)


def intertwining_matrix(T, A: Sequence[Sequence], field: FieldSpec) -> list[list]:
    """Matrix of ``Psi -> T Psi - Psi A`` on row-major coordinates of ``Psi``."""
    T = _as_operator(T)
    A = linalg.coerce(A, field)
    N, n = T.N, len(A)
    Tm = T.rows()
    rows = []
    for i in range(N):
        for j in range(n):
            row = [field.zero] * (N * n)
            for k in range(N):
                if Tm[i][k]:
                    row[k * n + j] = field.add(row[k * n + j], field(Tm[i][k]))
            for k in range(n):
                if A[k][j]:
                    row[i * n + k] = field.sub(row[i * n + k], A[k][j])
            rows.append(row)
    return rows


def intertwining_nullity(T, A, field: FieldSpec) -> int:
    T = _as_operator(T)
    return linalg.nullity(intertwining_matrix(T, A, field), field, T.N * len(A))



def _random_conjugate(rng, n: int, e: int, field: FieldSpec):
    from .orbits import partitions

    types = list(partitions(n, largest=e))
    sigma = types[int(rng.integers(len(types)))]
    g = linalg.random_invertible(rng, n, field)
    J = linalg.coerce(jordan_matrix(sigma), field)
    g_inv = linalg.inverse(g, field)
    return sigma, linalg.matmul(linalg.matmul(g, J, field), g_inv, field), g_inv


def random_nilpotent(rng, n: int, e: int, field: FieldSpec) -> tuple[Partition, list]:
    """A random point of N_{n,e}: a Jordan form with parts <= e conjugated by a random ``g``."""
    sigma, A, _ = _random_conjugate(rng, n, e, field)
    return sigma, A


def random_vee_point(rng, n: int, e: int, field: FieldSpec, attempts: int = 20):
    """A random full-rank point ``(T, A, Psi)`` of the intertwining scheme, T of type (e^n).

    ``Psi`` is a random vector of the solution space of ``T Psi = Psi A``;
    if no draw has rank ``n`` the chain witness moved by ``g^-1`` is used.
    """
    from .orbits import surjectivity_witness

    T = JordanOperator.of_type((e,) * n)
    sigma, A, g_inv = _random_conjugate(rng, n, e, field)
    N = T.N
    basis = linalg.nullspace(intertwining_matrix(T, A, field), field, N * n)
    for _ in range(attempts):
        coeffs = linalg.random_matrix(rng, 1, len(basis), field)[0]
        flat = [field.zero] * (N * n)
        for c, v in zip(coeffs, basis):
            flat = [field.add(x, field.mul(c, y)) for x, y in zip(flat, v)]
        psi = [flat[i * n:(i + 1) * n] for i in range(N)]
        if linalg.rank(psi, field) == n:
            return T, A, psi
    witness = linalg.coerce(surjectivity_witness(n, e, sigma), field)
    return T, A, linalg.matmul(witness, g_inv, field)
