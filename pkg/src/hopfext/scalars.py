"""Exact scalar fields.

Two fields are supported: the rationals and the prime fields GF(p).
Rational elements are plain ``int`` or ``fractions.Fraction`` values (an
integral value may appear as either; both are canonical rationals and compare
equal).  Elements of GF(p) are ``int`` residues in ``range(p)``.

Arithmetic inside the library uses the ordinary ``+``, ``-`` and ``*``
operators.  For GF(p) this is exact integer arithmetic followed by
:meth:`Field.reduce`, which is valid because reduction mod p is a ring
homomorphism.  Division always goes through :meth:`Field.div` /
:meth:`Field.inv`.
"""
from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ScalarError(ValueError):
    """Raised for malformed scalar literals or invalid field parameters."""


class Field:
    modulus: int = 0
    name: str = "field"
    zero = 0
    one = 1

    def __call__(self, value):
        raise NotImplementedError

    def reduce(self, value):
        return value

    def inv(self, value):
        raise NotImplementedError

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def parse(self, text: str):
        text = text.strip()
        if not _RATIONAL.match(text):
            raise ScalarError(f"not an exact scalar: {text!r}")
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise ScalarError(f"zero denominator in {text!r}")
        return self(Fraction(int(num), int(den) if den else 1))

    def format(self, value) -> str:
        return str(value)

    def is_zero(self, value) -> bool:
        return not self.reduce(value)

    def __eq__(self, other):
        return type(self) is type(other) and self.modulus == other.modulus

    def __hash__(self):
        return hash((type(self).__name__, self.modulus))


class Rationals(Field):
    name = "rational"

    def __call__(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a rational")

    def reduce(self, value):
        if type(value) is Fraction and value.denominator == 1:
            return value.numerator
        return value

    def inv(self, value):
        if not value:
            raise ZeroDivisionError("inverse of zero")
        return self.reduce(Fraction(1) / value)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return self.reduce(Fraction(a) / b)

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ScalarError(f"modulus {p} is not prime")
        self.modulus = p
        self.name = f"mod:{p}"

    def __call__(self, value):
        p = self.modulus
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot interpret {value!r} in GF({p})")

    def reduce(self, value):
        return value % self.modulus

    def inv(self, value):
        value %= self.modulus
        if not value:
            raise ZeroDivisionError("inverse of zero")
        return pow(value, -1, self.modulus)

    def __repr__(self):
        return f"GF({self.modulus})"


QQ = Rationals()


def parse_field(text: str) -> Field:
    """``"rational"`` or ``"mod:<p>"`` (also accepts ``"mod <p>"``)."""
    text = text.strip()
    if text in ("rational", "QQ"):
        return QQ
    m = re.match(r"^mod[:\s]\s*(\d+)$", text)
    if m:
        return PrimeField(int(m.group(1)))
    raise ScalarError(f"unknown scalar mode {text!r}")
