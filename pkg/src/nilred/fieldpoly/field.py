"""Exact coefficient fields: the rationals and prime fields F_p.

Field elements are plain Python values: ``Fraction`` over Q and ``int``
residues in ``[0, p)`` over F_p.  All arithmetic goes through a
:class:`FieldSpec`, so polynomial and matrix code never needs to know which
field it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p == 0``) or the prime field F_p."""

    kind: str = "rationals"
    p: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p != 0:
                raise ValueError("the rationals carry no modulus")
        elif self.kind == "prime_field":
            if not (2 <= self.p < 2**31) or not is_prime(self.p):
                raise ValueError(f"modulus must be a prime in [2, 2^31), got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals", 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime_field", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``Q`` or ``Fp:<p>`` (as used in ideal files and the CLI)."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls.rationals()
        if t.startswith("Fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return cls.prime(p)
        raise ValueError(f"bad field spec {text!r}; expected Q or Fp:<p>")

    def __str__(self) -> str:
        return "Q" if self.p == 0 else f"Fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def __call__(self, value: Any):
        """Coerce an int, Fraction or ``"a/b"`` string into the field."""
        p = self.p
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"{value} is not defined modulo {p}")
            return value.numerator * pow(den, -1, p) % p
        if isinstance(value, str):
            return self(Fraction(value))
        return int(value) % p

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if self.p:
            return pow(a, k, self.p)
        return a**k

    def elements(self):
        """All elements of a prime field, in increasing order."""
        if not self.p:
            raise ValueError("the rationals are not enumerable here")
        return range(self.p)

    def format(self, a) -> str:
        if self.p:
            return str(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)
