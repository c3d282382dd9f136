import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilred import linalg
from nilred.fieldpoly import GF, QQ
from nilred.orbits import (
    Partition,
    centralizer_dim,
    dominance_leq,
    jordan_matrix,
    jordan_type,
    max_partition,
    orbit_dim,
    partitions,
    surjectivity_witness,
)


def test_partition_validation_and_printing():
    assert str(Partition((3, 3, 1))) == "[3,3,1]"
    assert Partition.parse("[2,2,1]") == Partition((2, 2, 1))
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partitions_are_reverse_lex():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(partitions(8))) == 22


@pytest.mark.parametrize("n,e,expected", [(7, 3, (3, 3, 1)), (4, 2, (2, 2)), (5, 5, (5,))])
def test_max_partition(n, e, expected):
    assert max_partition(n, e) == Partition(expected)


def test_dominance_examples():
    assert dominance_leq((2, 2, 1), (3, 2))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((2, 1), (2, 1))
    with pytest.raises(ValueError):
        dominance_leq((2,), (1,))


def test_jordan_type_examples():
    assert jordan_type(jordan_matrix((2, 1)), QQ) == Partition((2, 1))
    assert jordan_type([[0] * 3] * 3, QQ) == Partition((1, 1, 1))
    with pytest.raises(ValueError):
        jordan_type([[1, 0], [0, 0]], QQ)


def test_orbit_dim_examples():
    assert orbit_dim((1, 1, 1)) == 0
    assert orbit_dim((2, 1)) == 4
    assert centralizer_dim((2, 1), QQ) == 5
    for n in range(1, 6):
        assert orbit_dim((n,)) == n * n - n


def test_witness_examples():
    assert surjectivity_witness(2, 2, (2,)) == [[1, 0], [0, 1], [0, 0], [0, 0]]
    assert surjectivity_witness(2, 2, (1, 1)) == [[1, 0], [0, 0], [0, 1], [0, 0]]
    with pytest.raises(ValueError):
        surjectivity_witness(3, 2, (3,))


@pytest.mark.parametrize("n", range(1, 9))
def test_dominated_by_max_partition_iff_parts_bounded(n):
    for e in range(1, n + 1):
        tau = max_partition(n, e)
        below = {s for s in partitions(n) if dominance_leq(s, tau)}
        bounded = {s for s in partitions(n) if s.largest <= e}
        assert below == bounded


@pytest.mark.parametrize("n", range(1, 7))
def test_orbit_dim_matches_centralizer_oracle(n):
    for sigma in partitions(n):
        assert orbit_dim(sigma) == n * n - centralizer_dim(sigma, GF(3))


@pytest.mark.parametrize("n", range(1, 9))
def test_jordan_type_round_trip(n):
    for sigma in partitions(n):
        assert jordan_type(jordan_matrix(sigma), GF(2)) == sigma


def _covers(n):
    parts = list(partitions(n))
    for s in parts:
        for t in parts:
            if s != t and dominance_leq(s, t):
                between = [u for u in parts if u not in (s, t) and dominance_leq(s, u) and dominance_leq(u, t)]
                if not between:
                    yield s, t


@pytest.mark.parametrize("n", range(2, 7))
def test_orbit_dim_strictly_monotone_on_covers(n):
    for s, t in _covers(n):
        assert orbit_dim(s) < orbit_dim(t)


@given(st.integers(0, 2**32 - 1), st.integers(1, 5))
def test_conjugation_preserves_type(seed, n):
    F = GF(5)
    rng = np.random.default_rng(seed)
    types = list(partitions(n))
    sigma = types[int(rng.integers(len(types)))]
    g = linalg.random_invertible(rng, n, F)
    J = linalg.coerce(jordan_matrix(sigma), F)
    A = linalg.matmul(linalg.matmul(g, J, F), linalg.inverse(g, F), F)
    assert jordan_type(A, F) == sigma
