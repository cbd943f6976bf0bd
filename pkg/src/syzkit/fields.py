"""Coefficient fields: exact rationals and prime fields.

Coefficients are stored as `fractions.Fraction` over the rationals and as
plain ints in [0, p) over a prime field.  A `FieldSpec` carries the choice
and supplies the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field k: rationals when p is None, else Z/p for a prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def of_int(self, n: int):
        if self.p is None:
            return Fraction(n)
        return n % self.p

    @property
    def zero(self):
        return self.of_int(0)

    @property
    def one(self):
        return self.of_int(1)

    def add(self, a, b):
        if self.p is None:
            return a + b
        return (a + b) % self.p

    def sub(self, a, b):
        if self.p is None:
            return a - b
        return (a - b) % self.p

    def mul(self, a, b):
        if self.p is None:
            return a * b
        return (a * b) % self.p

    def neg(self, a):
        if self.p is None:
            return -a
        return (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format(self, a) -> str:
        if self.p is None and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a) if self.p is None else a)

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = FieldSpec(None)
