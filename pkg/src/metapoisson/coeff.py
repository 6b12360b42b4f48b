"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are plain Python values: :class:`fractions.Fraction` over Q and
``int`` residues in ``[0, p)`` over GF(p).  A :class:`Field` carries the
arithmetic and the characteristic that selects the multiplication table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
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
class Field:
    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p != 0:
                raise FieldError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if not is_prime(self.p):
                raise FieldError(f"GF({self.p}): modulus must be prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    def __str__(self):
        return "Q" if self.is_rational else f"GF({self.p})"

    # -- construction of elements --------------------------------------
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rational else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.is_rational else 1

    def minus_one(self) -> Scalar:
        return Fraction(-1) if self.is_rational else self.p - 1

    def __call__(self, value) -> Scalar:
        """Coerce an int or Fraction into the field."""
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} is undefined in {self}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    # -- arithmetic ----------------------------------------------------
    def add(self, x: Scalar, y: Scalar) -> Scalar:
        return x + y if self.is_rational else (x + y) % self.p

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        return x - y if self.is_rational else (x - y) % self.p

    def neg(self, x: Scalar) -> Scalar:
        return -x if self.is_rational else (-x) % self.p

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        return x * y if self.is_rational else (x * y) % self.p

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return 1 / Fraction(x) if self.is_rational else pow(x, -1, self.p)

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.mul(x, self.inv(y))

    @staticmethod
    def is_zero(x: Scalar) -> bool:
        return x == 0

    def format(self, x: Scalar) -> str:
        return str(x)

    def parse(self, text: str) -> Scalar:
        """Parse ``n`` or ``n/m`` into the field."""
        return self(Fraction(text.strip()))


def rationals() -> Field:
    return Field(RATIONALS)


def prime_field(p: int) -> Field:
    return Field(PRIME_FIELD, p)


_GF = re.compile(r"^GF\(\s*(\d+)\s*\)$")


def field_make(spec: str | int) -> Field:
    """Build a field from ``"Q"``, ``"GF(p)"``, or a characteristic.

    ``0`` means the rationals, any other integer a prime field.

    >>> field_make("GF(5)").characteristic
    5
    """
    if isinstance(spec, int):
        return rationals() if spec == 0 else prime_field(spec)
    text = spec.strip()
    if text in ("Q", "QQ", "0"):
        return rationals()
    m = _GF.match(text)
    if m:
        return prime_field(int(m.group(1)))
    if text.isdigit():
        return prime_field(int(text))
    raise FieldError(f"unknown field {spec!r}; expected Q or GF(p)")
