"""Partitions and nilpotent orbits of n x n matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import linalg
from .fieldpoly.field import FieldSpec


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple

    def __init__(self, parts: "Iterable[int] | Partition"):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for p in self.parts if p > k) for k in range(self.largest))

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self):
        return f"Partition({self.parts})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("[]()")
        return cls(int(x) for x in body.split(",") if x.strip())


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    largest = n if largest is None else min(largest, n)

    def rec(rest: int, cap: int) -> Iterator[tuple]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, largest):
        yield Partition(parts)


def max_partition(n: int, e: int) -> Partition:
    """``(e^c, f)`` where ``n = c*e + f`` and ``0 <= f < e``."""
    if not 1 <= e <= n:
        raise ValueError(f"need 1 <= e <= n, got n={n}, e={e}")
    c, f = divmod(n, e)
    return Partition((e,) * c + ((f,) if f else ()))


def dominance_leq(sigma, tau) -> bool:
    sigma, tau = Partition(sigma), Partition(tau)
    if sigma.size != tau.size:
        raise ValueError(f"sizes differ: {sigma} vs {tau}")
    s = t = 0
    for k in range(max(len(sigma), len(tau))):
        s += sigma.parts[k] if k < len(sigma) else 0
        t += tau.parts[k] if k < len(tau) else 0
        if s > t:
            return False
    return True


def jordan_matrix(sigma) -> list[list[int]]:
    """Nilpotent Jordan form: one upper-shift block per part, in order.

    Within a block ``T e_{k+1} = e_k``, so ``e_1`` of each block spans its kernel.
    """
    sigma = Partition(sigma)
    n = sigma.size
    m = [[0] * n for _ in range(n)]
    start = 0
    for part in sigma:
        for k in range(part - 1):
            m[start + k][start + k + 1] = 1
        start += part
    return m


def jordan_type(a, field: FieldSpec) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    n = len(a)
    a = linalg.coerce(a, field)
    ranks = [n]
    power = linalg.identity(n, field)
    for _ in range(n):
        power = linalg.matmul(power, a, field)
        ranks.append(linalg.rank(power, field))
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise ValueError("matrix is not nilpotent")
    conj = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return Partition([c for c in conj if c]).conjugate()


def orbit_dim(sigma) -> int:
    """``n^2 - sum_j (sigma'_j)^2``: the dimension of the orbit of ``J_sigma``."""
    sigma = Partition(sigma)
    return sigma.size**2 - sum(c * c for c in sigma.conjugate())


def centralizer_dim(sigma, field: FieldSpec) -> int:
    """Nullity of ``X -> X J - J X``, computed by brute linear algebra."""
    sigma = Partition(sigma)
    n = sigma.size
    J = jordan_matrix(sigma)
    rows = []
    # coordinates of X in row-major order; equation (i, j) of X J - J X
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                if J[k][j]:
                    row[i * n + k] += J[k][j]
                if J[i][k]:
                    row[k * n + j] -= J[i][k]
            rows.append(row)
    return linalg.nullity(linalg.coerce(rows, field), field, n * n)


def surjectivity_witness(n: int, e: int, sigma) -> list[list[int]]:
    """An ``(n e) x n`` matrix ``Psi`` with ``T Psi = Psi J_sigma`` and rank ``n``.

    ``T`` is the Jordan operator of type ``(e^n)``.  Part ``i`` of ``sigma``
    takes the first ``sigma_i`` vectors of the ``i``-th Jordan chain of ``T``.
    """
    sigma = Partition(sigma)
    if sigma.size != n:
        raise ValueError(f"{sigma} is not a partition of {n}")
    if sigma.largest > e:
        raise ValueError(f"largest part of {sigma} exceeds e={e}: no witness exists")
    psi = [[0] * n for _ in range(n * e)]
    col = 0
    for block, part in enumerate(sigma):
        for k in range(part):
            psi[block * e + k][col] = 1
            col += 1
    return psi
