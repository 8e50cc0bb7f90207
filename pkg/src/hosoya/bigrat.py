"""Unreduced fractions with the no-cancellation arithmetic used by convergents.

Python ``int`` already is an exact arbitrary-precision integer, so integer
quantities throughout the package are plain ints.  A :class:`FormalFraction`
is a numerator/denominator *pair*; the pair is the object of interest, not
the rational number it denotes.  Adding ``2/3`` and ``3/3`` gives ``15/9``,
never ``5/3``, so that bottom-up evaluation of a continued fraction yields
the same pair as the forward convergent recurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "FormalFraction",
    "ff_from_int",
    "ff_add",
    "ff_sub",
    "ff_div_int",
    "reduce",
    "to_fraction",
    "parse_ff",
]


@dataclass(frozen=True)
class FormalFraction:
    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError(f"denominator must be positive, got {self.den}")

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def as_pair(self) -> tuple[int, int]:
        return self.num, self.den


def ff_from_int(k: int) -> FormalFraction:
    return FormalFraction(k, 1)


def ff_add(x: FormalFraction, y: FormalFraction) -> FormalFraction:
    """Return ``(x.num*y.den + x.den*y.num) / (x.den*y.den)`` without reducing."""
    return FormalFraction(x.num * y.den + x.den * y.num, x.den * y.den)


def ff_sub(x: FormalFraction, y: FormalFraction) -> FormalFraction:
    return FormalFraction(x.num * y.den - x.den * y.num, x.den * y.den)


def ff_div_int(b: int, x: FormalFraction) -> FormalFraction:
    """Return ``b / x`` as the pair ``(b*x.den, x.num)``, sign moved to the numerator.

    Raises ZeroDivisionError when ``x.num == 0``; in a continued fraction
    this means the tail below the partial numerator ``b`` vanished.
    """
    if x.num == 0:
        raise ZeroDivisionError(f"cannot divide {b} by the zero fraction {x}")
    if x.num < 0:
        return FormalFraction(-b * x.den, -x.num)
    return FormalFraction(b * x.den, x.num)


def reduce(x: FormalFraction) -> FormalFraction:
    """Return a new, gcd-reduced pair with the same value. ``x`` is untouched."""
    q = Fraction(x.num, x.den)
    return FormalFraction(q.numerator, q.denominator)


def to_fraction(x: FormalFraction) -> Fraction:
    return Fraction(x.num, x.den)


def parse_ff(text: str) -> FormalFraction:
    """Parse the ``"NUM/DEN"`` serialization (a bare integer means ``k/1``)."""
    num, sep, den = text.strip().partition("/")
    if not sep:
        return ff_from_int(int(num))
    return FormalFraction(int(num), int(den))
