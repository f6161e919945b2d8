"""Polynomial curve families and the exact-rational curves built from them.

A family is an integer polynomial P(x) = a_n x^n + ... + a_1 x with no
constant term, nonnegative coefficients, positive leading coefficient, and
content (gcd of all coefficients) equal to 1. Coefficients are stored
little-endian: coeffs[i] multiplies x**(i+1).

The text form used by the CLI and by `parse_family` lists coefficients in
descending degree order, comma-separated: "2,5" means 2x^2 + 5x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEGREE_CAP = 16


@dataclass(frozen=True)
class LatticePoint:
    """A point (a, b) in the positive integer quadrant."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"lattice point must have a, b >= 1, got ({self.a}, {self.b})")


@dataclass(frozen=True)
class PolyFamily:
    """Integer polynomial family y = q * P(x); coeffs[i] is the x**(i+1) coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("family needs at least one coefficient")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"negative coefficient in {self.coeffs}")
        if self.coeffs[-1] <= 0:
            raise ValueError("leading coefficient must be positive")
        if math.gcd(*self.coeffs) != 1:
            raise ValueError(f"coefficient content must be 1, got {math.gcd(*self.coeffs)}")
        if len(self.coeffs) > DEGREE_CAP:
            raise ValueError(f"degree {len(self.coeffs)} exceeds cap {DEGREE_CAP}")

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def eval(self, x: int) -> int:
        """P(x) by Horner; exact."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x

    @property
    def spec(self) -> str:
        """Canonical text form: descending-degree comma list, e.g. '2,5'."""
        return ",".join(str(c) for c in reversed(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            pw = "x" if i == 0 else f"x^{i + 1}"
            terms.append(pw if c == 1 else f"{c}{pw}")
        return " + ".join(terms)


def parse_family(text: str, normalize: bool = False) -> PolyFamily:
    """Parse a descending-degree coefficient list like "1,0,3" (= x^3 + 3x).

    With normalize=True a common factor is divided out instead of rejected
    (so "4,4" becomes x^2 + x); the default is to refuse content != 1.
    """
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise ValueError("empty family spec")
    try:
        desc = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"family spec {text!r} is not a comma list of integers") from None
    if any(c < 0 for c in desc):
        raise ValueError(f"family spec {text!r} has a negative coefficient")
    if desc[0] == 0:
        raise ValueError(f"family spec {text!r} has a zero leading coefficient")
    if len(desc) > DEGREE_CAP:
        raise ValueError(f"family degree {len(desc)} exceeds cap {DEGREE_CAP}")
    g = math.gcd(*desc)
    if g != 1:
        if not normalize:
            raise ValueError(f"family spec {text!r} has content {g}, expected 1")
        desc = [c // g for c in desc]
    return PolyFamily(tuple(reversed(desc)))


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact Fraction coefficients, constant term included.

    coeffs[i] multiplies x**i. Used for the constructed curves, whose
    whole point is having controlled denominators.
    """

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def eval(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                pw = "x" if i == 1 else f"x^{i}"
                terms.append(f"{c}*{pw}" if c != 1 else pw)
        return " + ".join(terms) if terms else "0"
