"""Wedge powers of linear maps, shuffle operators and Pluecker coordinates.

Basis vectors of the n-th wedge power are labelled by index sets: strictly
increasing tuples of 1-based indices.  Index sets are ordered by their rank
in the combinatorial number system (colex order), which fixes the row and
column order of every wedge matrix and the variable order of Pluecker rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .fieldpoly import FieldSpec, PolyRing, Polynomial, RingMatrix

IndexSet = tuple


def rank_index_set(J: IndexSet) -> int:
    """Position of ``J`` among all index sets of its size (colex, 0-based)."""
    return sum(comb(j - 1, i + 1) for i, j in enumerate(J))


def index_sets(N: int, n: int) -> list[IndexSet]:
    sets = [tuple(c) for c in combinations(range(1, N + 1), n)]
    return sorted(sets, key=rank_index_set)


def plucker_name(J: IndexSet, N: int | None = None) -> str:
    wide = (N if N is not None else max(J, default=0)) > 9
    return "p_" + ("_" if wide else "").join(str(j) for j in J)


def plucker_ring(N: int, n: int, field: FieldSpec) -> PolyRing:
    return PolyRing([plucker_name(J, N) for J in index_sets(N, n)], field)


@dataclass(frozen=True)
class WedgeMatrix:
    """Matrix of an operator on the n-th wedge power, rows/cols labelled by index sets."""

    n: int
    labels: tuple
    matrix: RingMatrix

    def entry(self, J: IndexSet, K: IndexSet) -> Polynomial:
        pos = {L: i for i, L in enumerate(self.labels)}
        return self.matrix[pos[tuple(J)], pos[tuple(K)]]

    def image(self, K: IndexSet) -> dict:
        """The image of ``e_K`` as ``{J: coefficient}`` (nonzero entries only)."""
        k = self.labels.index(tuple(K))
        return {J: self.matrix[i, k] for i, J in enumerate(self.labels) if self.matrix[i, k]}

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def _as_ring_matrix(M, field: FieldSpec | None) -> RingMatrix:
    if isinstance(M, RingMatrix):
        return M
    if field is None:
        raise ValueError("a field is needed for a plain integer matrix")
    return RingMatrix(PolyRing([], field), M)


def wedge_matrix(M, n: int, field: FieldSpec | None = None) -> WedgeMatrix:
    """Compound matrix of ``n x n`` minors: the matrix of the n-th wedge power of ``M``."""
    M = _as_ring_matrix(M, field)
    N, N2 = M.shape
    if N != N2:
        raise ValueError("wedge power of a non-square matrix")
    if not 1 <= n <= N:
        raise ValueError(f"wedge degree {n} out of range 1..{N}")
    labels = index_sets(N, n)
    rows = []
    for J in labels:
        rj = [j - 1 for j in J]
        rows.append([M.submatrix(rj, [k - 1 for k in K]).det() for K in labels])
    return WedgeMatrix(n, tuple(labels), RingMatrix(M.ring, rows))


def is_nilpotent(T: RingMatrix) -> bool:
    return (T ** T.nrows).is_zero()


def shuffle_operators(T, n: int, field: FieldSpec | None = None) -> list[WedgeMatrix]:
    """``[sh_1, ..., sh_n]``: the coefficients of ``z^d`` in the wedge power of ``I + zT``."""
    T = _as_ring_matrix(T, field)
    return list(_shuffle_operators(T, n))


@lru_cache(maxsize=256)
def _shuffle_operators(T: RingMatrix, n: int) -> tuple:
    if not is_nilpotent(T):
        raise ValueError("shuffle operators need a nilpotent operator")
    N = T.nrows
    if not 1 <= n <= N:
        raise ValueError(f"wedge degree {n} out of range 1..{N}")
    zring = T.ring.extend(["z"])
    z = zring.var("z")
    IzT = RingMatrix.identity(zring, N) + T.to_ring(zring).scale(z)
    W = wedge_matrix(IzT, n)
    size = len(W.labels)
    coeffs = [[W.matrix[i, j].coefficients_in("z") for j in range(size)] for i in range(size)]
    ops = []
    for d in range(1, n + 1):
        rows = [[T.ring.convert(c[d]) if d < len(c) else T.ring.zero for c in row] for row in coeffs]
        ops.append(WedgeMatrix(n, W.labels, RingMatrix(T.ring, rows)))
    return tuple(ops)


def shuffle_operator(T, n: int, d: int, field: FieldSpec | None = None) -> WedgeMatrix:
    """The shuffle operator ``sh_d`` on the n-th wedge power; zero for ``d > n``."""
    if d < 1:
        raise ValueError("shuffle degree starts at 1")
    T = _as_ring_matrix(T, field)
    ops = _shuffle_operators(T, n)
    if d <= n:
        return ops[d - 1]
    size = len(ops[0].labels)
    return WedgeMatrix(n, ops[0].labels, RingMatrix.zeros(T.ring, size, size))


def exterior_product(vectors: Sequence[Sequence[Polynomial]], ring: PolyRing) -> dict:
    """Expand ``v_1 ∧ ... ∧ v_n`` multilinearly into ``{index set: coefficient}``."""
    cur: dict = {(): ring.one}
    for v in vectors:
        nxt: dict = {}
        for J, c in cur.items():
            for i, x in enumerate(v, start=1):
                if not x or i in J:
                    continue
                later = sum(1 for j in J if j > i)
                K = tuple(sorted(J + (i,)))
                t = c * x
                if later % 2:
                    t = -t
                nxt[K] = nxt[K] + t if K in nxt else t
        cur = {K: c for K, c in nxt.items() if c}
    return cur


def shuffle_by_positions(T: RingMatrix, n: int, d: int) -> WedgeMatrix:
    """``sh_d(e_K) = sum over d-subsets S of positions of e_k1 ∧ .. T e_ki (i in S) .. ∧ e_kn``.

    Computed straight from multilinearity; an independent route to the
    shuffle operators.
    """
    N = T.nrows
    ring = T.ring
    labels = index_sets(N, n)
    cols = [[T[i, j] for i in range(N)] for j in range(N)]
    unit = [[ring.one if i == j else ring.zero for i in range(N)] for j in range(N)]
    pos = {L: i for i, L in enumerate(labels)}
    rows = [[ring.zero] * len(labels) for _ in labels]
    for k, K in enumerate(labels):
        for S in combinations(range(n), d):
            vecs = [cols[K[i] - 1] if i in S else unit[K[i] - 1] for i in range(n)]
            for J, c in exterior_product(vecs, ring).items():
                rows[pos[J]][k] = rows[pos[J]][k] + c
    return WedgeMatrix(n, tuple(labels), RingMatrix(ring, rows))


def wedge_identity_holds(T, n: int, field: FieldSpec | None = None) -> bool:
    """Check ``∧^n(I + zT) = I + sum_{d=1}^{n} z^d sh_d`` exactly over ``k[z]``.

    The left side is expanded in the exterior algebra column by column; the
    right side uses the minor-based shuffle operators.
    """
    T = _as_ring_matrix(T, field)
    N = T.nrows
    zring = T.ring.extend(["z"])
    z = zring.var("z")
    ops = shuffle_operators(T, n)
    labels = ops[0].labels
    Tz = T.to_ring(zring)
    rhs = [[zring.one if a == b else zring.zero for b in labels] for a in labels]
    for d, op in enumerate(ops, start=1):
        zd = z**d
        for i in range(len(labels)):
            for j in range(len(labels)):
                if op.matrix[i, j]:
                    rhs[i][j] = rhs[i][j] + zring.convert(op.matrix[i, j]) * zd
    pos = {L: i for i, L in enumerate(labels)}
    for k, K in enumerate(labels):
        vecs = [[(zring.one if i == col - 1 else zring.zero) + Tz[i, col - 1] * z for i in range(N)]
                for col in K]
        image = exterior_product(vecs, zring)
        column = [zring.zero] * len(labels)
        for J, c in image.items():
            column[pos[J]] = c
        if column != [rhs[i][k] for i in range(len(labels))]:
            return False
    return True


def shuffle_linear_forms(T, n: int, field: FieldSpec | None = None,
                         ring: PolyRing | None = None) -> list[Polynomial]:
    """Nonzero forms ``sum_K sh_d(J, K) p_K`` over all ``d >= 1`` and rows ``J``."""
    T = _as_ring_matrix(T, field)
    if not T.is_zero() and T.ring.nvars:
        if any(not x.is_constant() for x in T.entries()):
            raise ValueError("shuffle forms need an operator with constant entries")
    N = T.nrows
    ring = ring or plucker_ring(N, n, T.ring.field)
    if T.is_zero():
        return []
    forms = []
    for op in shuffle_operators(T, n):
        p = [ring.var(plucker_name(K, N)) for K in op.labels]
        for i in range(len(op.labels)):
            form = ring.zero
            for j in range(len(op.labels)):
                c = op.matrix[i, j]
                if c:
                    form = form + p[j].scale(c.constant_coefficient())
            if form:
                forms.append(form)
    return forms


def _signed_sort(seq: Sequence[int]) -> tuple[int, IndexSet | None]:
    if len(set(seq)) != len(seq):
        return 0, None
    inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(seq))


def plucker_relations(N: int, n: int, field: FieldSpec) -> list[Polynomial]:
    """Grassmann-Pluecker exchange relations, deduplicated up to scalars.

    For ``|I| = n - 1`` and ``|J| = n + 1``:
    ``sum_k (-1)^k p_{I + j_k} p_{J - j_k} = 0``.
    """
    if not 1 <= n <= N:
        raise ValueError(f"need 1 <= n <= N, got n={n}, N={N}")
    ring = plucker_ring(N, n, field)
    seen = set()
    out = []
    for I in combinations(range(1, N + 1), n - 1):
        for J in combinations(range(1, N + 1), n + 1):
            rel = ring.zero
            for k, j in enumerate(J):
                s1, A = _signed_sort(I + (j,))
                if not s1:
                    continue
                B = J[:k] + J[k + 1:]
                term = ring.var(plucker_name(A, N)) * ring.var(plucker_name(B, N))
                sign = s1 * (-1 if k % 2 else 1)
                rel = rel + term if sign > 0 else rel - term
            if rel:
                rel = rel.monic()
                if rel not in seen:
                    seen.add(rel)
                    out.append(rel)
    return out


def minors_substitution(M: RingMatrix, plucker: PolyRing) -> dict:
    """``{p_J: minor of M on rows J}`` for an ``N x n`` matrix ``M``."""
    N, n = M.shape
    cols = list(range(n))
    return {plucker_name(J, N): M.submatrix([j - 1 for j in J], cols).det() for J in index_sets(N, n)}
