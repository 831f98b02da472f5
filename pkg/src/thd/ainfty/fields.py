"""Exact coefficient fields: rationals and prime fields.

Field elements support ``+ - * /``, equality and truthiness (nonzero).
Floating point is never used; every rank computation stays exact.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


class Rationals:
    """The field of rationals, with ``fractions.Fraction`` elements."""

    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def __repr__(self) -> str:
        return "Q"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")


class GFElement:
    """An element of a prime field, reduced representative in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other) -> "GFElement":
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        return GFElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return GFElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._lift(other).__sub__(self)

    def __mul__(self, other):
        other = self._lift(other)
        return GFElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return GFElement(self.value * pow(other.value, -1, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class PrimeField:
    """The field with ``p`` elements, ``p`` prime (not verified)."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2:
            raise ValueError("prime field order must be >= 2")
        self.p = p
        self.name = f"F{p}"
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def of(self, value) -> GFElement:
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise ValueError("mixed prime fields")
            return value
        if isinstance(value, int):
            return GFElement(value, self.p)
        if isinstance(value, Fraction):
            return GFElement(value.numerator, self.p) / GFElement(value.denominator, self.p)
        if isinstance(value, str):
            return self.of(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def __repr__(self) -> str:
        return self.name

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))


QQ = Rationals()


def field_by_name(name: str):
    """Parse ``"Q"`` or ``"F <p>"``/``"F<p>"`` into a field object."""
    token = name.strip()
    if token in ("Q", "QQ", "rational", "rationals"):
        return QQ
    if token.startswith("F"):
        rest = token[1:].strip()
        return PrimeField(int(rest)) if rest else PrimeField()
    raise ValueError(f"unknown field {name!r}")
