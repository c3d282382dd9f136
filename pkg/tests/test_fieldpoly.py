from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilred import linalg
from nilred.fieldpoly import (
    GF,
    GREVLEX,
    INCONCLUSIVE,
    LEX,
    QQ,
    FieldSpec,
    MonomialOrder,
    PolyRing,
    PolySyntaxError,
    RingMatrix,
    char_poly,
    cofactor_det,
    format_ideal_text,
    parse_ideal_text,
    parse_poly,
    squarefree_part,
)

R = PolyRing(["a", "b", "c", "d"], QQ)
a, b, c, d = R.gens()


def test_field_parse_and_print():
    assert str(FieldSpec.parse("Q")) == "Q"
    assert FieldSpec.parse("Fp:7") == GF(7)
    assert GF(7)("3/2") == 5
    assert QQ("3/2") == Fraction(3, 2)
    with pytest.raises(ValueError):
        GF(8)
    with pytest.raises(ZeroDivisionError):
        GF(3)("1/3")


def test_parse_literal():
    assert parse_poly("a + d", R) == a + d


def test_parse_expansion_against_termwise_product():
    f = parse_poly("(a+d)^2 - 4*(a*d - b*c)", R)
    # term-by-term oracle: a^2 - 2ad + d^2 + 4bc
    expected = R.from_exponents({(2, 0, 0, 0): 1, (1, 0, 0, 1): -2, (0, 0, 0, 2): 1, (0, 1, 1, 0): 4})
    assert f == expected


def test_parse_reduces_mod_p():
    ring = PolyRing(["x"], GF(3))
    assert parse_poly("3*x", ring) == 0


def test_parse_errors_carry_position():
    with pytest.raises(PolySyntaxError) as err:
        parse_poly("a + * b", R)
    assert err.value.column == 5
    with pytest.raises(PolySyntaxError):
        parse_poly("a + q", R)
    with pytest.raises(PolySyntaxError):
        parse_poly("a^-1", R)
    with pytest.raises(ZeroDivisionError):
        parse_poly("x/3", PolyRing(["x"], GF(3)))


def test_printing_conventions():
    ring = PolyRing(["a_1_1", "a_1_2"], QQ)
    f = ring.parse("a_1_1^2 - 1/2*a_1_2 + 3")
    assert str(f) == "a_1_1^2 - 1/2*a_1_2 + 3"
    assert str(ring.zero) == "0"
    assert ring.zero.total_degree() == float("-inf")


def test_orders_compare_monomials():
    lex = PolyRing(["x", "y"], QQ, LEX)
    grev = PolyRing(["x", "y"], QQ, GREVLEX)
    assert lex.parse("x + y^5").leading_exponents() == (1, 0)
    assert grev.parse("x + y^5").leading_exponents() == (0, 5)
    blk = PolyRing(["x", "y", "z"], QQ, MonomialOrder.block(1))
    assert blk.parse("x + y^3*z^3").leading_exponents() == (1, 0, 0)


def test_char_poly_examples():
    lam_ring = PolyRing(["lam"], QQ)
    lam = lam_ring.var("lam")
    assert char_poly(RingMatrix(PolyRing([], QQ), [[0, 1], [0, 0]])) == lam**2
    assert char_poly(RingMatrix(PolyRing([], QQ), [[0] * 3] * 3)) == lam**3
    M = RingMatrix(R, [[a, b], [c, d]])
    chi = char_poly(M)
    S = chi.ring
    L = S.var("lam")
    # cofactor oracle: det(lam I - M)
    diff = RingMatrix.identity(S, 2).scale(L) - M.to_ring(S)
    assert chi == cofactor_det([[diff[i, j] for j in range(2)] for i in range(2)], S)
    assert chi == L**2 - S.convert(a + d) * L + S.convert(a * d - b * c)


def test_squarefree_part_examples():
    ring = PolyRing(["x"], QQ)
    x = ring.var("x")
    assert squarefree_part(x**2) == x
    assert squarefree_part(x * (x - 1)) == x * (x - 1)
    f5 = PolyRing(["x"], GF(5)).var("x")
    assert squarefree_part(f5**5) is INCONCLUSIVE
    with pytest.raises(ValueError):
        squarefree_part(ring.zero)


def test_ideal_file_round_trip():
    text = "# demo\nring: x y over Fp:5\nx^2 + 3*y\n\n# a comment\nx*y - 1\n"
    ring, gens = parse_ideal_text(text)
    assert ring.variables == ("x", "y") and ring.field == GF(5)
    again = parse_ideal_text(format_ideal_text(ring, gens))
    assert again[1] == gens


# --- properties ------------------------------------------------------------------------

coeff = st.integers(-4, 4)
exps = st.tuples(*[st.integers(0, 3)] * 4)
polys = st.dictionaries(exps, coeff, max_size=5).map(R.from_exponents)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f - f == 0


@given(polys)
def test_parse_print_round_trip(f):
    assert parse_poly(str(f), R) == f


@given(polys, st.sampled_from(list("abcd")))
def test_derivative_is_a_derivation(f, v):
    g = f * f
    assert g.diff(v) == (f.diff(v) * f).scale(2)


@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_char_poly_conjugation_invariant(seed, n):
    F = GF(7)
    rng = np.random.default_rng(seed)
    M = linalg.random_matrix(rng, n, n, F)
    P = linalg.random_invertible(rng, n, F)
    conj = linalg.matmul(linalg.matmul(P, M, F), linalg.inverse(P, F), F)
    assert linalg.char_poly(conj, F) == linalg.char_poly(M, F)


@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_cayley_hamilton(seed, n):
    F = GF(5)
    rng = np.random.default_rng(seed)
    M = linalg.random_matrix(rng, n, n, F)
    coeffs = linalg.char_poly(M, F)
    acc = linalg.zeros(n, n, F)
    for c in coeffs:  # Horner on matrices
        acc = linalg.add(linalg.matmul(acc, M, F), linalg.scale(linalg.identity(n, F), c, F), F)
    assert linalg.is_zero(acc)


@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_bareiss_matches_cofactor(seed, n):
    rng = np.random.default_rng(seed)
    ring = PolyRing(["x", "y"], QQ)
    x, y = ring.gens()
    pool = [ring.zero, ring.one, x, y, x - y, x * y + 2, -3 * x]
    rows = [[pool[int(rng.integers(len(pool)))] for _ in range(n)] for _ in range(n)]
    assert RingMatrix(ring, rows).det() == cofactor_det(rows, ring)
