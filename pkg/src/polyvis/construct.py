"""Building curves through a prescribed lattice point that dodge all earlier columns.

The recipe: pick a prime ell > max(a, b), expand ell in base a with digits
d_1..d_k (least significant first), and take

    C(x) = sum_i (b * d_i) / (ell * a) * x**i.

Horner in base a reassembles ell at x = a, so C(a) = b exactly, while for
0 < t < a the digit polynomial stays below ell (hence coprime to it) and an
ell survives in every denominator: the open segment from (0,0) to (a, b)
meets no lattice point. The same digit polynomial drives the multi-prime
average and the n-coordinate bundle; every claim is re-checked in exact
rational arithmetic and the outcome recorded, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import base_digits, is_prime, next_prime_above, valuation
from .polyfam import LatticePoint, RationalPoly


@dataclass(frozen=True)
class Construction:
    point: LatticePoint
    ell: int
    digits: tuple[int, ...]  # little-endian base-a digits of ell
    curve: RationalPoly
    verified: bool  # curve(t) non-integral for every 0 < t < a

    def to_record(self) -> dict:
        return {
            "point": {"a": self.point.a, "b": self.point.b},
            "ell": self.ell,
            "digits": list(self.digits),
            "curve": [_frac_str(c) for c in self.curve.coeffs],
            "curve_text": str(self.curve),
            "verified": self.verified,
        }


@dataclass(frozen=True)
class MultiPrimeConstruction:
    """Average of single-prime curves; denominators should retain every prime."""

    point: LatticePoint
    ells: tuple[int, ...]
    components: tuple[Construction, ...]
    curve: RationalPoly
    verified: bool
    denominator_counterexamples: tuple[int, ...]  # interior t where some ell drops out

    @property
    def denominator_claim_ok(self) -> bool:
        return not self.denominator_counterexamples

    def to_record(self) -> dict:
        return {
            "point": {"a": self.point.a, "b": self.point.b},
            "ells": list(self.ells),
            "components": [c.to_record() for c in self.components],
            "curve": [_frac_str(c) for c in self.curve.coeffs],
            "curve_text": str(self.curve),
            "verified": self.verified,
            "denominator_claim_ok": self.denominator_claim_ok,
        }


@dataclass(frozen=True)
class CurveBundle:
    """One curve per coordinate after the first; x runs along coordinate 1."""

    point: tuple[int, ...]
    ell: int
    curves: tuple[RationalPoly, ...]
    verified: bool


@dataclass(frozen=True)
class ValuationProfile:
    ell: int
    points: tuple[tuple[int, int], ...]  # (exponent, v_ell) for nonzero coefficients


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _digit_curve(numer: int, base: int, ell: int) -> tuple[list[int], RationalPoly]:
    """Coefficients numer*d_i/(ell*base) on x**i from the base-`base` digits of ell."""
    digits = base_digits(ell, base)
    coeffs = [Fraction(0)] + [Fraction(numer * d, ell * base) for d in digits]
    return digits, RationalPoly(tuple(coeffs))


def _check_ell(ell: int, bound: int) -> None:
    if not is_prime(ell):
        raise ValueError(f"ell={ell} is not prime")
    if ell <= bound:
        raise ValueError(f"ell={ell} must exceed the largest coordinate {bound}")


def _check_base(a: int) -> None:
    if a < 2:
        raise ValueError(
            "base-a digits need a >= 2; note (1, b) is already visible on y = b*x"
        )


def construct_visible(pt: LatticePoint, ell: int | None = None) -> Construction:
    """Curve through (a, b) missing every lattice point with 0 < x < a.

    When ell is omitted the smallest admissible prime is used. The
    non-integrality of curve(t) at every interior integer is checked here,
    not trusted, and lands in `verified`.
    """
    _check_base(pt.a)
    bound = max(pt.a, pt.b)
    if ell is None:
        ell = next_prime_above(bound)
    else:
        _check_ell(ell, bound)
    digits, curve = _digit_curve(pt.b, pt.a, ell)
    verified = curve.eval(pt.a) == pt.b and all(
        curve.eval(t).denominator != 1 for t in range(1, pt.a)
    )
    return Construction(pt, ell, tuple(digits), curve, verified)


def construct_multi_prime(pt: LatticePoint, ells) -> MultiPrimeConstruction:
    """Average of the single-prime curves over distinct primes ells.

    The average still hits (a, b) exactly; each interior value should keep
    every ell in its reduced denominator. Both facts are checked per input;
    a violation of the denominator claim is recorded as a counterexample
    list rather than raised.
    """
    _check_base(pt.a)
    ells = tuple(ells)
    if not ells:
        raise ValueError("need at least one prime")
    if len(set(ells)) != len(ells):
        raise ValueError(f"duplicate prime in {ells}")
    bound = max(pt.a, pt.b)
    for ell in ells:
        _check_ell(ell, bound)
    components = tuple(construct_visible(pt, ell) for ell in ells)
    r = len(components)
    width = max(len(c.curve.coeffs) for c in components)
    avg = [
        sum((c.curve.coeffs[i] if i < len(c.curve.coeffs) else Fraction(0)) for c in components)
        / r
        for i in range(width)
    ]
    curve = RationalPoly(tuple(avg))
    verified = curve.eval(pt.a) == pt.b
    bad: list[int] = []
    for t in range(1, pt.a):
        val = curve.eval(t)
        if val.denominator == 1:
            verified = False
        if any(val.denominator % ell for ell in ells):
            bad.append(t)
    return MultiPrimeConstruction(pt, ells, components, curve, verified, tuple(bad))


def construct_curve_bundle(coords, ell: int | None = None) -> CurveBundle:
    """Curves (C_2(x), ..., C_n(x)) through (a_1, ..., a_n), parametrized by x.

    C_k(a_1) = a_k for each k, and at integer 0 < x < a_1 no coordinate is
    an integer, so the arc meets no other lattice point.
    """
    coords = tuple(coords)
    if len(coords) < 2:
        raise ValueError("need at least two coordinates")
    if any(c < 1 for c in coords):
        raise ValueError(f"coordinates must be >= 1, got {coords}")
    _check_base(coords[0])
    bound = max(coords)
    if ell is None:
        ell = next_prime_above(bound)
    else:
        _check_ell(ell, bound)
    base = coords[0]
    curves = tuple(_digit_curve(c, base, ell)[1] for c in coords[1:])
    verified = all(curve.eval(base) == c for curve, c in zip(curves, coords[1:])) and all(
        curve.eval(t).denominator != 1 for curve in curves for t in range(1, base)
    )
    return CurveBundle(coords, ell, curves, verified)


def valuation_profile(c: Construction) -> ValuationProfile:
    """(exponent, v_ell(coefficient)) for each nonzero coefficient.

    For these curves every valuation is -1: the support of the lower convex
    hull is one horizontal segment at height -1.
    """
    pts = tuple(
        (i, valuation(c.ell, coef))
        for i, coef in enumerate(c.curve.coeffs)
        if coef != 0
    )
    return ValuationProfile(c.ell, pts)
