"""Visibility predicates and column structure for a polynomial family.

(a, b) is visible along y = q*P(x) when no earlier column t in [1, a)
has b*P(t)/P(a) an integer; equivalently, none of the column moduli

    m_{a,t} = P(a) // gcd(P(a), P(t))

divides b. Column a = 1 has no earlier columns, so every (1, b) is
visible. Everything in this module is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import factorize, valuation
from .polyfam import LatticePoint, PolyFamily


@dataclass(frozen=True)
class VisibilityVerdict:
    visible: bool
    witness_t: int | None = None
    witness_modulus: int | None = None


@dataclass(frozen=True)
class ColumnProfile:
    """Everything the counting and scanning code needs about one column."""

    a: int
    moduli: tuple[tuple[int, int], ...]  # (t, m_{a,t}) for t in [1, a)
    minimal_moduli: tuple[int, ...]  # divisibility-minimal values, ascending
    lcm_prime_set: tuple[int, ...]  # primes dividing lcm of the d_t


def modulus(family: PolyFamily, a: int, t: int) -> int:
    """m_{a,t} = P(a) / gcd(P(a), P(t)); the divisor of b that blocks (a, b) at t."""
    if not 1 <= t < a:
        raise ValueError(f"need 1 <= t < a, got t={t}, a={a}")
    pa = family.eval(a)
    return pa // gcd(pa, family.eval(t))


def is_visible(family: PolyFamily, point: LatticePoint) -> VisibilityVerdict:
    """Visibility of (a, b), with the smallest blocking t as witness if invisible."""
    a, b = point.a, point.b
    pa = family.eval(a)
    for t in range(1, a):
        m = pa // gcd(pa, family.eval(t))
        if b % m == 0:
            return VisibilityVerdict(False, t, m)
    return VisibilityVerdict(True)


def is_visible_direct(family: PolyFamily, point: LatticePoint) -> bool:
    """Ground-truth check straight from the definition, in rational arithmetic.

    Kept deliberately independent of `is_visible` (no shared modulus math)
    so the two can cross-check each other.
    """
    a, b = point.a, point.b
    pa = family.eval(a)
    for t in range(1, a):
        if Fraction(b * family.eval(t), pa).denominator == 1:
            return False
    return True


def gcd_p(family: PolyFamily, point: LatticePoint) -> int:
    """gcd(P(a), b). Value 1 is a sufficient (not necessary) visibility certificate."""
    return gcd(family.eval(point.a), point.b)


def _minimal_by_divisibility(values: set[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(values):
        if not any(m % k == 0 for k in kept):
            kept.append(m)
    return tuple(kept)


def _lcm_prime_set(family: PolyFamily, a: int) -> tuple[int, ...]:
    """Primes dividing L_P(a) = lcm of d_t = P(a)/gcd over t < a.

    p divides some d_t exactly when v_p(P(t)) < v_p(P(a)) for some t, so
    the lcm itself never has to be materialized.
    """
    if a == 1:
        return ()
    primes = []
    for p, e in factorize(family.eval(a)):
        for t in range(1, a):
            if valuation(p, family.eval(t)) < e:
                primes.append(p)
                break
    return tuple(primes)


def column_profile(family: PolyFamily, a: int) -> ColumnProfile:
    """Full modulus list for column a plus its minimal set and lcm prime support."""
    if a < 1:
        raise ValueError(f"column index must be >= 1, got {a}")
    pa = family.eval(a)
    pairs = tuple((t, pa // gcd(pa, family.eval(t))) for t in range(1, a))
    minimal = _minimal_by_divisibility({m for _, m in pairs})
    return ColumnProfile(a, pairs, minimal, _lcm_prime_set(family, a))


def lcm_criterion(family: PolyFamily, point: LatticePoint) -> bool:
    """True when b is coprime to L_P(a): a sufficient visibility certificate."""
    return all(point.b % p != 0 for p in _lcm_prime_set(family, point.a))


class ProfileCache:
    """Column data for one family, computed once per column and reused.

    Grid scans and censuses touch every column many times; the cache keeps
    evaluated P-values, minimal modulus sets, and lcm prime sets keyed by
    column index. Filling is idempotent, so repeated lookups return the
    same tuples.
    """

    def __init__(self, family: PolyFamily):
        self.family = family
        self._values: list[int] = [0]  # P(0) = 0; extended on demand
        self._minimal: dict[int, tuple[int, ...]] = {}
        self._primes: dict[int, tuple[int, ...]] = {}

    def value(self, x: int) -> int:
        while len(self._values) <= x:
            self._values.append(self.family.eval(len(self._values)))
        return self._values[x]

    def minimal_moduli(self, a: int) -> tuple[int, ...]:
        got = self._minimal.get(a)
        if got is None:
            pa = self.value(a)
            mods = {pa // gcd(pa, self.value(t)) for t in range(1, a)}
            got = self._minimal[a] = _minimal_by_divisibility(mods)
        return got

    def prime_set(self, a: int) -> tuple[int, ...]:
        got = self._primes.get(a)
        if got is None:
            primes = []
            for p, e in factorize(self.value(a)):
                for t in range(1, a):
                    if valuation(p, self.value(t)) < e:
                        primes.append(p)
                        break
            got = self._primes[a] = tuple(primes)
        return got

    def is_visible(self, a: int, b: int) -> bool:
        """Same verdict as module-level is_visible, via the minimal modulus set."""
        return all(b % m != 0 for m in self.minimal_moduli(a))
