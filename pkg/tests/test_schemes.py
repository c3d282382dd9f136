import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilred import linalg
from nilred.fieldpoly import GF, QQ, PolyRing, RingMatrix
from nilred.groebner import Ideal, groebner_basis, ideal_equal
from nilred.orbits import jordan_matrix, jordan_type, surjectivity_witness
from nilred.schemes import (
    Chart,
    JordanOperator,
    NilpotentSchemeSpec,
    chart_matrix,
    chart_ring,
    charts,
    intertwining_nullity,
    invariance_only_chart_ideal,
    invariant_chart_ideal,
    nilpotent_scheme_ideal,
    phi,
    random_nilpotent,
    random_vee_point,
    restricted_operator,
    shuffle_chart_ideal,
    tangent_dim,
    vee_scheme_ideal,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        NilpotentSchemeSpec(2, 3)
    with pytest.raises(ValueError):
        Chart(4, 2, (1, 1))


def test_nilpotent_ideal_trivial_case():
    I = nilpotent_scheme_ideal(NilpotentSchemeSpec(1, 1), QQ)
    assert ideal_equal(I, Ideal(I.ring, I.ring.gens()))


def test_nilpotent_ideal_22():
    I = nilpotent_scheme_ideal(NilpotentSchemeSpec(2, 2), QQ)
    a, b, c, d = I.ring.gens()
    assert len(I.generators) == 6
    assert ideal_equal(I, Ideal(I.ring, (a + d, a * d - b * c)))


@pytest.mark.parametrize("n", [2, 3])
def test_full_nilpotency_is_char_poly_alone(n):
    I = nilpotent_scheme_ideal(NilpotentSchemeSpec(n, n), QQ)
    coeffs = I.generators[-n:]
    assert ideal_equal(I, Ideal(I.ring, coeffs))


def test_chart_matrix_examples():
    ch = Chart(2, 1, (1,))
    M = chart_matrix(ch, chart_ring(ch, QQ))
    assert str(M[0, 0]) == "1" and str(M[1, 0]) == "x_2_1"
    ch = Chart(4, 2, (1, 3))
    ring = chart_ring(ch, QQ)
    M = chart_matrix(ch, ring)
    assert [[str(M[i, j]) for j in range(2)] for i in (0, 2)] == [["1", "0"], ["0", "1"]]
    assert ring.variables == ("x_2_1", "x_2_2", "x_4_1", "x_4_2")
    assert M.submatrix([0, 2], [0, 1]).det() == 1


def test_gr12_chart_ideals():
    ch = Chart(2, 1, (1,))
    inv = invariance_only_chart_ideal((2,), ch, QQ)
    x = inv.ring.var("x_2_1")
    assert groebner_basis(inv).basis == (x**2,)
    assert groebner_basis(invariant_chart_ideal((2,), ch, QQ)).basis == (x,)
    assert groebner_basis(shuffle_chart_ideal((2,), ch, QQ)).basis == (x,)


def test_zero_operator_gives_zero_ideal():
    for ch in charts(3, 1):
        assert invariant_chart_ideal((1, 1, 1), ch, QQ).generators == ()
        assert shuffle_chart_ideal((1, 1, 1), ch, QQ).generators == ()


def test_stable_coordinate_plane_is_on_the_scheme():
    # span(e1, e3) is stable under T of type (2,2)
    ideal = invariant_chart_ideal((2, 2), Chart(4, 2, (1, 3)), QQ)
    assert all(g.constant_coefficient() == 0 for g in ideal.generators)


@pytest.mark.parametrize("T,n", [((2,), 1), ((2, 2), 2), ((3, 1), 2), ((2, 1), 1), ((2, 1), 2)])
@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_chart_ideals_agree(T, n, field):
    for ch in charts(sum(T), n):
        assert ideal_equal(invariant_chart_ideal(T, ch, field), shuffle_chart_ideal(T, ch, field))


def test_vee_examples():
    V = vee_scheme_ideal(NilpotentSchemeSpec(1, 1), (1,), QQ)
    assert set(V.ring.variables) == {"a_1_1", "psi_1_1"}
    V = vee_scheme_ideal(NilpotentSchemeSpec(2, 2), (2, 2), QQ)
    psi = surjectivity_witness(2, 2, (2,))
    A = jordan_matrix((2,))
    point = [x for r in A for x in r] + [x for r in psi for x in r]
    assert all(g.evaluate(point) == 0 for g in V.generators)
    # A = 0 leaves T Psi = 0
    zero_a = {f"a_{i}_{j}": 0 for i in (1, 2) for j in (1, 2)}
    restricted = [g.subs(zero_a) for g in V.generators[-8:]]
    T = JordanOperator.of_type((2, 2))
    ring = V.ring
    Psi = RingMatrix.symbolic(ring, "psi", 4, 2)
    assert restricted == (T.ring_matrix(ring) @ Psi).entries()
    with pytest.raises(ValueError):
        vee_scheme_ideal(NilpotentSchemeSpec(2, 2), (2, 1), QQ)


def test_phi_examples():
    T = JordanOperator.of_type((2, 2))
    assert phi(T, [[1, 0], [0, 1], [0, 0], [0, 0]], QQ) == [[0, 1], [0, 0]]
    assert phi(T, [[1], [0], [0], [0]], QQ) == [[0]]
    with pytest.raises(ValueError):
        phi(T, [[1, 1], [0, 0], [0, 0], [0, 0]], QQ)
    with pytest.raises(ValueError):
        phi(T, [[0], [1], [0], [0]], QQ)
    T3 = JordanOperator.of_type((2,) * 5)
    psi = surjectivity_witness(5, 2, (2, 2, 1))
    assert jordan_type(phi(T3, psi, GF(3)), GF(3)).parts == (2, 2, 1)


def test_tangent_dim_examples():
    I = nilpotent_scheme_ideal(NilpotentSchemeSpec(2, 2), QQ)
    assert tangent_dim(I, [0, 1, 0, 0]) == 2
    assert tangent_dim(I, [0, 0, 0, 0]) == 3
    ring = PolyRing(["x", "y", "z"], QQ)
    assert tangent_dim(Ideal(ring, ()), [1, 2, 3]) == 3
    with pytest.raises(ValueError):
        tangent_dim(I, [1, 0, 0, 0])


def test_phi_image_in_nilpotent_scheme_on_charts():
    # generator-level membership: T^e = 0 forces entries of B^e into the chart ideal
    for T, n in [((2, 2), 2), ((2, 2, 2), 3)]:
        e = T[0]
        for ch in charts(sum(T), n):
            gb = groebner_basis(invariant_chart_ideal(T, ch, QQ))
            B = restricted_operator(T, ch, QQ)
            assert all(gb.contains(x) for x in (B**e).entries())


@given(st.integers(0, 2**32 - 1), st.integers(1, 3), st.integers(1, 3))
def test_phi_is_conjugation_equivariant(seed, n, e):
    F = GF(5)
    rng = np.random.default_rng(seed)
    e = min(e, n)
    T, A, psi = random_vee_point(rng, n, e, F)
    g = linalg.random_invertible(rng, n, F)
    B = phi(T, psi, F)
    moved = phi(T, linalg.matmul(psi, g, F), F)
    assert moved == linalg.matmul(linalg.matmul(linalg.inverse(g, F), B, F), g, F)


@given(st.integers(0, 2**32 - 1), st.integers(1, 3), st.integers(1, 3))
def test_relative_dimension_at_random_points(seed, n, e):
    F = GF(5)
    rng = np.random.default_rng(seed)
    e = min(e, n)
    spec = NilpotentSchemeSpec(n, e)
    T, A, psi = random_vee_point(rng, n, e, F)
    assert intertwining_nullity(T, A, F) == n * n
    a_point = [x for r in A for x in r]
    total = tangent_dim(vee_scheme_ideal(spec, (e,) * n, F), a_point + [x for r in psi for x in r])
    assert total == tangent_dim(nilpotent_scheme_ideal(spec, F), a_point) + n * n


@given(st.integers(0, 2**32 - 1), st.integers(1, 4), st.integers(1, 4))
def test_random_nilpotent_lies_on_scheme(seed, n, e):
    F = GF(3)
    e = min(e, n)
    sigma, A = random_nilpotent(np.random.default_rng(seed), n, e, F)
    assert jordan_type(A, F) == sigma and sigma.largest <= e
    I = nilpotent_scheme_ideal(NilpotentSchemeSpec(n, e), F)
    assert all(g.evaluate([x for r in A for x in r]) == 0 for g in I.generators)
