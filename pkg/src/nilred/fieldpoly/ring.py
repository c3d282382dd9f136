"""Sparse multivariate polynomials over an exact field.

Monomials are packed into a single Python ``int``.  The packed layout is
chosen per ring so that

* integer comparison of packed monomials *is* the ring's monomial order,
* integer addition is monomial multiplication, and
* divisibility is one subtraction plus a mask test.

Each monomial is stored as a sequence of 16-bit fields (15 value bits and
one guard bit), most significant first::

    [order weight rows ...][total degree][e_1 ... e_n]

The weight rows realise the order (identity rows for lex, partial-sum rows
for grevlex); the trailing fields hold the raw exponents so that decoding is
cheap.  All weights are non-negative, so every field is additive and the
guard bits detect componentwise ``<=``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .field import FieldSpec

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
NEG_INF = -math.inf


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or a two-block product order.

    ``block(split, first, second)`` compares the first ``split`` variables
    with ``first`` and breaks ties on the remaining ones with ``second``;
    it is an elimination order for the first block.
    """

    kind: str = "grevlex"
    split: int = 0
    inner: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and len(self.inner) != 2:
            raise ValueError("a block order needs exactly two inner orders")

    @classmethod
    def block(cls, split: int, first: "MonomialOrder | None" = None,
              second: "MonomialOrder | None" = None) -> "MonomialOrder":
        return cls("block", split, (first or GREVLEX, second or GREVLEX))

    def rows(self, nvars: int) -> list[list[int]]:
        if self.kind == "lex":
            return [[int(i == j) for j in range(nvars)] for i in range(nvars)]
        if self.kind == "grevlex":
            return [[int(j < k) for j in range(nvars)] for k in range(nvars, 0, -1)]
        first, second = self.inner
        if not 0 <= self.split <= nvars:
            raise ValueError(f"block split {self.split} out of range for {nvars} variables")
        rest = nvars - self.split
        top = [r + [0] * rest for r in first.rows(self.split)]
        bottom = [[0] * self.split + r for r in second.rows(rest)]
        return top + bottom

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({self.split},{self.inner[0]},{self.inner[1]})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


class PolyRing:
    """k[x_1, ..., x_n] with a fixed monomial order."""

    def __init__(self, variables: Iterable[str], field: FieldSpec,
                 order: MonomialOrder = GREVLEX):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.field = field
        self.order = order
        self.nvars = n = len(self.variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        rows = order.rows(n)
        self._rows = rows
        nfields = len(rows) + 1 + n
        self._deg_shift = n * FIELD_BITS
        self.guard = sum(1 << (i * FIELD_BITS + FIELD_BITS - 1) for i in range(nfields))
        # packed image of each unit vector: multiplication is addition
        units = []
        for i in range(n):
            m = 0
            for r in rows:
                m = (m << FIELD_BITS) | r[i]
            m = (m << FIELD_BITS) | 1
            for j in range(n):
                m = (m << FIELD_BITS) | int(i == j)
            units.append(m)
        self._units = tuple(units)
        self._key = (self.variables, field, order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.field}, {self.order})"

    # -- monomials -------------------------------------------------------

    def encode(self, exps: Sequence[int]) -> int:
        m = 0
        for i, e in enumerate(exps):
            if e:
                if e < 0 or e > MAX_EXPONENT:
                    raise ValueError(f"exponent {e} out of range")
                m += e * self._units[i]
        return m

    def decode(self, m: int) -> tuple[int, ...]:
        n = self.nvars
        return tuple((m >> ((n - 1 - i) * FIELD_BITS)) & FIELD_MASK for i in range(n))

    def mono_degree(self, m: int) -> int:
        return (m >> self._deg_shift) & FIELD_MASK

    def mono_divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b + g - a) & g) == g

    def mono_lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def mono_coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.decode(a), self.decode(b)))

    # -- constructors ----------------------------------------------------

    def from_terms(self, terms: Mapping[int, object]) -> "Polynomial":
        return Polynomial(self, {m: c for m, c in terms.items() if c})

    def from_exponents(self, terms: Mapping[Sequence[int], object]) -> "Polynomial":
        F = self.field
        out: dict[int, object] = {}
        for exps, c in terms.items():
            m = self.encode(exps)
            v = F.add(out.get(m, F.zero), F(c))
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self, out)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {0: c} if c else {})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self!r}") from None
        return Polynomial(self, {self._units[i]: self.field.one})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def with_variables(self, variables: Iterable[str],
                       order: MonomialOrder | None = None) -> "PolyRing":
        return PolyRing(variables, self.field, order or self.order)

    def extend(self, new_vars: Iterable[str], front: bool = False) -> "PolyRing":
        new_vars = tuple(new_vars)
        vs = new_vars + self.variables if front else self.variables + new_vars
        return PolyRing(vs, self.field, self.order)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Re-express ``f`` (from any ring over the same field) in this ring."""
        if f.ring == self:
            return f
        if f.ring.field != self.field:
            raise ValueError("cannot convert between different fields")
        src = f.ring
        try:
            target = [self.index[v] for v in src.variables]
        except KeyError as exc:
            used = f.variables()
            missing = [v for v in used if v not in self.index]
            if missing:
                raise ValueError(f"variables {missing} are not in the target ring") from exc
            target = [self.index.get(v, -1) for v in src.variables]
        units = self._units
        out = {}
        for m, c in f._terms.items():
            nm = 0
            for i, e in enumerate(src.decode(m)):
                if e:
                    nm += e * units[target[i]]
            out[nm] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_poly

        return parse_poly(text, self)


class Polynomial:
    """An immutable polynomial: a mapping from packed monomial to nonzero coefficient."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash", "_eval_cache")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None
        self._eval_cache = None

    # -- inspection ------------------------------------------------------

    def monomials(self) -> tuple[int, ...]:
        """Packed monomials in decreasing order."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms, reverse=True))
        return self._sorted

    def terms(self):
        """``(exponents, coefficient)`` pairs in decreasing monomial order."""
        dec = self.ring.decode
        return [(dec(m), self._terms[m]) for m in self.monomials()]

    def coefficients(self):
        return [self._terms[m] for m in self.monomials()]

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_coefficient(self):
        return self._terms.get(0, self.ring.field.zero)

    @property
    def lm(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.monomials()[0]

    @property
    def lc(self):
        return self._terms[self.lm]

    def leading_exponents(self) -> tuple[int, ...]:
        return self.ring.decode(self.lm)

    def total_degree(self):
        if not self._terms:
            return NEG_INF
        md = self.ring.mono_degree
        return max(md(m) for m in self._terms)

    def degree_in(self, var: str):
        if not self._terms:
            return NEG_INF
        i = self.ring.index[var]
        dec = self.ring.decode
        return max(dec(m)[i] for m in self._terms)

    def variables(self) -> tuple[str, ...]:
        used = [False] * self.ring.nvars
        dec = self.ring.decode
        for m in self._terms:
            for i, e in enumerate(dec(m)):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.variables, used) if u)

    def is_homogeneous(self) -> bool:
        md = self.ring.mono_degree
        return len({md(m) for m in self._terms}) <= 1

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self._terms.items()})

    def mul_term(self, mono: int, c) -> "Polynomial":
        """Multiply by the single term ``c * mono`` (``mono`` packed)."""
        F = self.ring.field
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m + mono: F.mul(v, c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                v = get(m)
                out[m] = ca * cb if v is None else v + ca * cb
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution --------------------------------------

    def diff(self, var: str) -> "Polynomial":
        ring = self.ring
        i = ring.index[var]
        unit = ring._units[i]
        F = ring.field
        out = {}
        for m, c in self._terms.items():
            e = ring.decode(m)[i]
            if e:
                v = F.mul(c, F(e))
                if v:
                    out[m - unit] = v
        return Polynomial(ring, out)

    def _eval_plan(self):
        if self._eval_cache is None:
            dec = self.ring.decode
            self._eval_cache = [
                (c, [(i, e) for i, e in enumerate(dec(m)) if e]) for m, c in self._terms.items()
            ]
        return self._eval_cache

    def evaluate(self, point):
        """Evaluate at a full point (sequence in variable order, or a name mapping)."""
        ring = self.ring
        F = ring.field
        if isinstance(point, Mapping):
            point = [F(point[v]) for v in ring.variables]
        elif len(point) != ring.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {ring.nvars} variables")
        p = F.p
        total = F.zero
        for c, factors in self._eval_plan():
            t = c
            for i, e in factors:
                t = t * point[i] ** e
                if p:
                    t %= p
            total += t
        return total % p if p else total

    def subs(self, mapping: Mapping[str, object]) -> "Polynomial":
        """Substitute field values or same-ring polynomials for some variables."""
        ring = self.ring
        F = ring.field
        idx = {ring.index[v]: val for v, val in mapping.items()}
        powers: dict[tuple[int, int], Polynomial] = {}
        result: dict = {}
        acc = ring.zero
        for m, c in self._terms.items():
            exps = list(ring.decode(m))
            term = None
            scalar = c
            for i, val in idx.items():
                e = exps[i]
                if not e:
                    continue
                exps[i] = 0
                if isinstance(val, Polynomial):
                    key = (i, e)
                    if key not in powers:
                        powers[key] = val**e
                    term = powers[key] if term is None else term * powers[key]
                else:
                    scalar = F.mul(scalar, F.pow(F(val), e))
            if not scalar:
                continue
            rest = ring.encode(exps)
            if term is None:
                v = F.add(result.get(rest, F.zero), scalar)
                if v:
                    result[rest] = v
                else:
                    result.pop(rest, None)
            else:
                acc = acc + term.mul_term(rest, scalar)
        return acc + Polynomial(ring, result)

    def coefficients_in(self, var: str) -> list["Polynomial"]:
        """Coefficients of ``var^0, var^1, ...`` as polynomials in the other variables."""
        ring = self.ring
        i = ring.index[var]
        unit = ring._units[i]
        buckets: dict[int, dict] = {}
        for m, c in self._terms.items():
            e = ring.decode(m)[i]
            buckets.setdefault(e, {})[m - e * unit] = c
        top = max(buckets, default=-1)
        return [Polynomial(ring, buckets.get(k, {})) for k in range(top + 1)]

    # -- printing --------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def format_monomial(ring: PolyRing, exps: Sequence[int]) -> str:
    parts = []
    for v, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Canonical text: terms in decreasing order, ``*`` and ``^`` operators."""
    ring = f.ring
    F = ring.field
    if not f._terms:
        return "0"
    out = []
    for exps, c in f.terms():
        neg = F.p == 0 and c < 0
        a = -c if neg else c
        mono = format_monomial(ring, exps)
        if not mono:
            body = F.format(a)
        elif a == 1:
            body = mono
        else:
            body = f"{F.format(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
