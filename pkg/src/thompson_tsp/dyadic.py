"""Exact dyadic rationals ``numerator / 2**exponent``."""

from __future__ import annotations

from fractions import Fraction


class Dyadic:
    """An exact rational whose denominator is a power of two.

    Values are normalized on construction: ``exponent == 0`` or the
    numerator is odd, so two equal values always have equal fields.
    Instances are treated as immutable; nothing in the package mutates one.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int, exponent: int = 0):
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        elif numerator == 0:
            exponent = 0
        elif exponent:
            tz = (numerator & -numerator).bit_length() - 1
            if tz:
                shift = tz if tz < exponent else exponent
                numerator >>= shift
                exponent -= shift
        self.numerator = numerator
        self.exponent = exponent

    @classmethod
    def from_fraction(cls, value) -> "Dyadic":
        q = Fraction(value)
        d = q.denominator
        if d & (d - 1):
            raise ValueError(f"{value} is not a dyadic rational")
        return cls(q.numerator, d.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        return cls.from_fraction(Fraction(text))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def _aligned(self, other: "Dyadic"):
        e1, e2 = self.exponent, other.exponent
        if e1 == e2:
            return self.numerator, other.numerator, e1
        if e1 > e2:
            return self.numerator, other.numerator << (e1 - e2), e1
        return self.numerator << (e2 - e1), other.numerator, e2

    def __add__(self, other: "Dyadic") -> "Dyadic":
        a, b, e = self._aligned(other)
        return Dyadic(a + b, e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        a, b, e = self._aligned(other)
        return Dyadic(a - b, e)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.numerator, self.exponent)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    def scale2(self, k: int) -> "Dyadic":
        """Return ``self * 2**k``."""
        return Dyadic(self.numerator, self.exponent - k)

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self.numerator == other.numerator and self.exponent == other.exponent
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.numerator, self.exponent))

    def __lt__(self, other: "Dyadic") -> bool:
        a, b, _ = self._aligned(other)
        return a < b

    def __le__(self, other: "Dyadic") -> bool:
        a, b, _ = self._aligned(other)
        return a <= b

    def __gt__(self, other: "Dyadic") -> bool:
        a, b, _ = self._aligned(other)
        return a > b

    def __ge__(self, other: "Dyadic") -> bool:
        a, b, _ = self._aligned(other)
        return a >= b

    def __repr__(self) -> str:
        return f"Dyadic({self.numerator}, {self.exponent})"

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def log2_ratio(num: Dyadic, den: Dyadic) -> int:
    """Return ``k`` with ``num / den == 2**k``; raise if the ratio is not a power of two."""
    a, b = num.numerator, den.numerator
    if a <= 0 or b <= 0:
        raise ValueError("power-of-two ratio needs positive operands")
    ta = (a & -a).bit_length() - 1
    tb = (b & -b).bit_length() - 1
    if a >> ta != b >> tb:
        raise ValueError(f"{num}/{den} is not a power of two")
    return (ta - num.exponent) - (tb - den.exponent)
