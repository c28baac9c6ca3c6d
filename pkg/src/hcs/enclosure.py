"""Certified rational enclosures for irrational constants.

An Enclosure is a closed interval with exact Fraction endpoints that is
known to contain the real value it stands for. All arithmetic here is
exact (no rounding happens after construction), so a comparison that
succeeds on the unfavorable endpoint is a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Union

DEFAULT_DIGITS = 30


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    # -- construction ----------------------------------------------------

    @staticmethod
    def exact(x) -> "Enclosure":
        f = Fraction(x)
        return Enclosure(f, f)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self) -> str:
        return f"Enclosure({float(self.lo)!r}, {float(self.hi)!r})"

    # -- arithmetic (exact interval arithmetic) ---------------------------

    def __add__(self, other) -> "Enclosure":
        o = as_enclosure(other)
        return Enclosure(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __sub__(self, other) -> "Enclosure":
        return self + (-as_enclosure(other))

    def __rsub__(self, other) -> "Enclosure":
        return as_enclosure(other) + (-self)

    def __mul__(self, other) -> "Enclosure":
        o = as_enclosure(other)
        products = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Enclosure":
        o = as_enclosure(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("division by an enclosure containing zero")
        quotients = (
            self.lo / o.lo,
            self.lo / o.hi,
            self.hi / o.lo,
            self.hi / o.hi,
        )
        return Enclosure(min(quotients), max(quotients))

    def __rtruediv__(self, other) -> "Enclosure":
        return as_enclosure(other) / self

    def __pow__(self, exponent: int) -> "Enclosure":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = Enclosure.exact(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- certified comparisons --------------------------------------------

    def certainly_le(self, other) -> bool:
        return self.hi <= as_enclosure(other).lo

    def certainly_lt(self, other) -> bool:
        return self.hi < as_enclosure(other).lo

    def certainly_ge(self, other) -> bool:
        return self.lo >= as_enclosure(other).hi

    def contains(self, x) -> bool:
        f = Fraction(x)
        return self.lo <= f <= self.hi

    def floor(self) -> int:
        """Integer floor, provided both endpoints agree on it."""
        a, b = floor(self.lo), floor(self.hi)
        if a != b:
            raise ValueError(f"floor of {self!r} is ambiguous")
        return a


NumberLike = Union[int, Fraction, Enclosure]


def as_enclosure(x) -> Enclosure:
    if isinstance(x, Enclosure):
        return x
    return Enclosure.exact(x)


def lower_bound(x) -> Fraction:
    return x.lo if isinstance(x, Enclosure) else Fraction(x)


def upper_bound(x) -> Fraction:
    return x.hi if isinstance(x, Enclosure) else Fraction(x)


def is_exact(x) -> bool:
    return not isinstance(x, Enclosure) or x.lo == x.hi


def sqrt_enclosure(x, digits: int = DEFAULT_DIGITS) -> Enclosure:
    """Enclosure of sqrt(x) for non-negative rational x, to 10^-digits."""
    f = Fraction(x)
    if f < 0:
        raise ValueError("square root of a negative value")
    if f == 0:
        return Enclosure.exact(0)
    scale = 10 ** digits
    # a = floor(sqrt(x) * scale), computed with integer arithmetic only
    a = isqrt(f.numerator * scale * scale // f.denominator)
    lo = Fraction(a, scale)
    hi = Fraction(a + 1, scale)
    if lo * lo == f:
        hi = lo
    return Enclosure(lo, hi)
