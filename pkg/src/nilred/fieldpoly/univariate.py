"""Univariate helpers on dense coefficient lists (low degree first)."""

from __future__ import annotations

from enum import Enum

from .field import FieldSpec
from .ring import Polynomial


class Verdict(str, Enum):
    RADICAL = "radical"
    NOT_RADICAL = "not_radical"
    INCONCLUSIVE = "inconclusive"


INCONCLUSIVE = Verdict.INCONCLUSIVE


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def dense_coefficients(f: Polynomial) -> tuple[str | None, list]:
    """Return ``(variable, [c_0, c_1, ...])`` for a univariate polynomial."""
    vs = f.variables()
    if len(vs) > 1:
        raise ValueError(f"{f} is not univariate")
    F = f.ring.field
    if not vs:
        return None, _trim([f.constant_coefficient()])
    var = vs[0]
    return var, [c.constant_coefficient() if c else F.zero for c in f.coefficients_in(var)]


def from_dense(coeffs: list, var: str | None, ring) -> Polynomial:
    if var is None:
        return ring.const(coeffs[0] if coeffs else 0)
    x = ring.var(var)
    total = ring.zero
    for k, c in enumerate(coeffs):
        if c:
            total = total + (x**k).scale(c)
    return total


def poly_divmod(a: list, b: list, F: FieldSpec) -> tuple[list, list]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    inv = F.inv(b[-1])
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, bc))
        a.pop()
    return _trim(q), _trim(a)


def poly_gcd(a: list, b: list, F: FieldSpec) -> list:
    """Monic gcd (``[]`` for gcd(0, 0))."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = poly_divmod(a, b, F)
        a, b = b, r
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def derivative(a: list, F: FieldSpec) -> list:
    return _trim([F.mul(F(k), c) for k, c in enumerate(a)][1:])


def is_squarefree_dense(a: list, F: FieldSpec):
    """True/False, or INCONCLUSIVE when the derivative vanishes identically."""
    a = _trim(list(a))
    if len(a) <= 1:
        return True
    d = derivative(a, F)
    if not d:
        return INCONCLUSIVE
    return len(poly_gcd(a, d, F)) == 1


def squarefree_part(f: Polynomial):
    """``f / gcd(f, f')``, or :data:`INCONCLUSIVE` when ``f' = 0``.

    Over F_p a vanishing derivative means ``f`` is a polynomial in ``x^p``;
    the gcd trick says nothing in that case, so no answer is given.
    """
    if not f:
        raise ValueError("squarefree part of the zero polynomial")
    var, a = dense_coefficients(f)
    F = f.ring.field
    if len(a) <= 1:
        return f.ring.one
    d = derivative(a, F)
    if not d:
        return INCONCLUSIVE
    g = poly_gcd(a, d, F)
    q, r = poly_divmod(a, g, F)
    assert not r
    inv = F.inv(q[-1])
    return from_dense([F.mul(c, inv) for c in q], var, f.ring)
