"""Exact min-plus arithmetic over the rationals extended by infinity.

Values are either ``fractions.Fraction`` or the singleton ``INF``.  All
arithmetic is exact; floating point input is rejected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union


class Infinity:
    """The neutral element of min and the absorbing element of +.

    Compares strictly greater than every rational.  There is a single
    instance, ``INF``; never construct a rational sentinel instead.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("infinity cannot be negated")

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

TVal = Union[Fraction, Infinity]


def tval(x) -> TVal:
    """Coerce ``x`` to a tropical value (Fraction or INF).

    Accepts Fractions, ints, and strings like ``"-3"``, ``"5/7"`` or
    ``"inf"``.  Floats are rejected to keep every computation exact.
    """
    if isinstance(x, Infinity):
        return INF
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("boolean is not a tropical value")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if s.lower() == "inf" or s == "∞":
            return INF
        return Fraction(s)
    if isinstance(x, float):
        raise TypeError("floating point weights are not supported; use exact rationals")
    raise TypeError(f"cannot interpret {x!r} as a tropical value")


def is_finite(v: TVal) -> bool:
    return v is not INF


def tadd(a: TVal, b: TVal) -> TVal:
    """Tropical addition: min."""
    return b if b < a else a


def tmul(a: TVal, b: TVal) -> TVal:
    """Tropical multiplication: ordinary addition, INF absorbing."""
    if a is INF or b is INF:
        return INF
    return a + b


def tsum(values: Iterable[TVal]) -> TVal:
    """Tropical sum (minimum) of an iterable, INF if empty."""
    out: TVal = INF
    for v in values:
        if v < out:
            out = v
    return out
