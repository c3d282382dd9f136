import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilred.fieldpoly import GF, LEX, QQ, PolyRing, Verdict
from nilred.groebner import (
    GroebnerTimeout,
    Ideal,
    contains,
    dimension,
    eliminate,
    groebner_basis,
    ideal_equal,
    is_subideal,
    normal_form,
    orbit_closure_ideal,
    saturate,
    zero_dim_radical_test,
)
from nilred.schemes import NilpotentSchemeSpec, nilpotent_scheme_ideal

R = PolyRing(["a", "b", "c", "d"], QQ)
a, b, c, d = R.gens()
N22 = Ideal(R, (a + d, a**2 + b * c, a * b + b * d, c * a + d * c, c * b + d**2, a * d - b * c))


def test_reduced_basis_of_n22():
    gb = groebner_basis(N22)
    assert set(map(str, gb.basis)) == {"a + d", "b*c + d^2"}
    assert gb.verify()


def test_trivial_bases():
    ring = PolyRing(["x"], QQ)
    x = ring.var("x")
    assert groebner_basis(Ideal(ring, (x, x**2))).basis == (x,)
    assert groebner_basis(Ideal(ring, (ring.one,))).basis == (ring.one,)
    assert groebner_basis(Ideal(ring, (2 * x + 4,))).basis == (x + 2,)


def test_ideal_equality_examples():
    assert ideal_equal(N22, Ideal(R, (a + d, a * d - b * c)))
    ring = PolyRing(["x"], QQ)
    x = ring.var("x")
    assert not ideal_equal(Ideal(ring, (x,)), Ideal(ring, (x**2,)))
    gens = N22.generators
    shuffled = Ideal(R, tuple(g.scale(k + 2) for k, g in enumerate(reversed(gens))))
    assert ideal_equal(N22, shuffled)


def test_elimination_examples():
    ring = PolyRing(["x", "y", "z"], QQ)
    x, y, z = ring.gens()
    I = Ideal(ring, (y - x**2, z - x**3))
    E = eliminate(I, ["x"])
    assert E.ring.variables == ("y", "z")
    yy, zz = E.ring.gens()
    assert ideal_equal(E, Ideal(E.ring, (yy**3 - zz**2,)))
    # substitution oracle: every generator vanishes at (t^2, t^3)
    for t in range(-3, 4):
        assert all(g.evaluate([t**2, t**3]) == 0 for g in E.generators)
    assert ideal_equal(eliminate(I, []), I)
    unit = eliminate(Ideal(ring, (ring.one,)), ["x", "y"])
    assert groebner_basis(unit).is_unit()


def test_saturation_removes_embedded_component():
    ring = PolyRing(["x", "y"], QQ)
    x, y = ring.gens()
    I = Ideal(ring, (x * y, y**2))
    assert ideal_equal(saturate(I, y), Ideal(ring, (ring.one,)))
    assert ideal_equal(saturate(I, x), Ideal(ring, (y,)))


def test_dimension_examples():
    ring = PolyRing(["x", "y"], QQ)
    x, y = ring.gens()
    assert dimension(Ideal(ring, (x,))) == 1
    assert dimension(Ideal(ring, ())) == 2
    assert dimension(Ideal(ring, (ring.one,))) == -1
    assert dimension(N22) == 2


def test_radical_test_examples():
    ring = PolyRing(["x", "y"], QQ)
    x, y = ring.gens()
    assert zero_dim_radical_test(Ideal(ring, (x**2, y))) is Verdict.NOT_RADICAL
    assert zero_dim_radical_test(Ideal(ring, (x, y))) is Verdict.RADICAL
    assert zero_dim_radical_test(Ideal(ring, (x**2 - x, y))) is Verdict.RADICAL
    f3 = PolyRing(["x", "y"], GF(3))
    u, v = f3.gens()
    assert zero_dim_radical_test(Ideal(f3, (u**3 - 1, v))) is Verdict.INCONCLUSIVE
    with pytest.raises(ValueError):
        zero_dim_radical_test(Ideal(ring, (x,)))


def test_orbit_closure_examples():
    zero = orbit_closure_ideal((1, 1), QQ)
    assert ideal_equal(zero, Ideal(zero.ring, zero.ring.gens()))
    reg = orbit_closure_ideal((2,), QQ)
    x11, x12, x21, x22 = reg.ring.gens()
    assert ideal_equal(reg, Ideal(reg.ring, (x11 + x22, x11 * x22 - x12 * x21)))


def test_orbit_closure_21():
    I = orbit_closure_ideal((2, 1), QQ)
    assert dimension(I) == 4
    gb = groebner_basis(I)
    names = {f"a_{i}_{j}": f"x_{i}_{j}" for i in range(1, 4) for j in range(1, 4)}
    for e in (2, 3):
        nil = nilpotent_scheme_ideal(NilpotentSchemeSpec(3, e), QQ).rename(names).to_ring(I.ring)
        assert all(gb.contains(g) for g in nil.generators)


def test_timeout_is_an_exception_not_an_answer():
    ring = PolyRing([f"x{i}" for i in range(6)], QQ)
    xs = ring.gens()
    hard = Ideal(ring, tuple(sum(x**k for x in xs) - k for k in range(1, 7)))
    with pytest.raises(GroebnerTimeout):
        groebner_basis(hard, timeout=0.0)


def test_order_choice_changes_basis_but_not_ideal():
    ring = PolyRing(["x", "y"], QQ)
    x, y = ring.gens()
    I = Ideal(ring, (x**2 - y, x * y - 1))
    lex = groebner_basis(I, order=LEX)
    assert lex.verify()
    grevlex = groebner_basis(I)
    assert all(grevlex.contains(ring.convert(g)) for g in lex.basis)


# --- properties ------------------------------------------------------------------------

S = PolyRing(["x", "y", "z"], GF(7))
small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), st.integers(1, 6), min_size=1, max_size=3).map(
    S.from_exponents)


@given(st.lists(small, min_size=1, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_combinations_reduce_to_zero(gens, mults):
    I = Ideal(S, tuple(gens))
    gb = groebner_basis(I, timeout=30)
    assert gb.verify()
    combo = sum((m * g for m, g in zip(mults, gens)), S.zero)
    assert normal_form(combo, gb) == 0
    assert all(gb.contains(g) for g in gens)


@given(st.lists(small, min_size=1, max_size=2), small)
def test_elimination_is_monotone(gens, extra):
    I = Ideal(S, tuple(gens))
    J = Ideal(S, tuple(gens) + (extra,))
    assert is_subideal(eliminate(I, ["x"], timeout=30), eliminate(J, ["x"], timeout=30), timeout=30)


@given(st.integers(0, 2**32 - 1))
def test_basis_is_deterministic(seed):
    rng = np.random.default_rng(seed)
    gens = tuple(S.from_exponents({tuple(int(v) for v in rng.integers(0, 3, 3)): int(rng.integers(1, 7))
                                   for _ in range(3)}) for _ in range(2))
    first = groebner_basis(Ideal(S, gens), timeout=30)
    second = groebner_basis(Ideal(S, tuple(reversed(gens))), timeout=30)
    assert first.basis == second.basis
    assert contains(Ideal(S, gens), gens[0] * gens[1])
