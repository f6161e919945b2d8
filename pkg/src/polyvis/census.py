"""Counting visible points and the density constants attached to a family.

Counts are exact integers; densities are formed by one float division at
the end. The workhorse is a per-column sieve: column a is invisible exactly
at multiples of its minimal moduli, so a bytearray stride-fill per column
gives the whole [1,N]^2 census in O(N^2 / m) byte writes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from .arith import factorize, primes_up_to
from .errors import ResourceLimitError
from .polyfam import LatticePoint, PolyFamily
from .visibility import ProfileCache, is_visible_direct

DEFAULT_N_CAP = 10_000
SUBSET_MODE = "subset-enumeration"
PRUNED_MODE = "pruned-lcm"
_SUBSET_COLUMN_CAP = 26  # 2^(a-1) terms per column beyond this is hopeless


@dataclass(frozen=True)
class CensusResult:
    n: int
    visible_count: int
    density_estimate: float


@dataclass(frozen=True)
class ConstantResult:
    """Partial Euler product with a crude-but-rigorous tail estimate."""

    value: float
    prime_bound: int
    tail_bound: float


def _check_n(n: int, cap: int | None) -> None:
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    limit = DEFAULT_N_CAP if cap is None else cap
    if n > limit:
        raise ResourceLimitError(f"N={n} exceeds the configured cap {limit}")


def _fill_column(buf: bytearray, zeros: bytes, mods, n: int) -> None:
    """Mark buf[b] = 1 at every b <= n divisible by some modulus."""
    buf[:] = zeros
    for m in mods:
        if m <= n:
            buf[m::m] = b"\x01" * (n // m)


def _count_visible_range(cache: ProfileCache, a_lo: int, a_hi: int, n: int) -> int:
    """Visible points with a in [a_lo, a_hi], b in [1, n]."""
    buf = bytearray(n + 1)
    zeros = bytes(n + 1)
    total = 0
    for a in range(a_lo, a_hi + 1):
        _fill_column(buf, zeros, cache.minimal_moduli(a), n)
        total += n - buf.count(1, 1, n + 1)
    return total


def empirical_density(family: PolyFamily, n: int, cap: int | None = None) -> CensusResult:
    """Exact visible count over [1,N]^2 and its density."""
    _check_n(n, cap)
    count = _count_visible_range(ProfileCache(family), 1, n, n)
    return CensusResult(n, count, count / (n * n))


def density_rows(family: PolyFamily, n: int, cap: int | None = None) -> list[tuple[int, int, float]]:
    """(N', visible_count, density) for every prefix square N' = 1..n.

    One pass: when column a arrives, its contribution to future rows is
    accumulated into a per-b histogram, so row a only needs the histogram
    value at b = a (columns < a) plus its own column count up to b = a.
    """
    _check_n(n, cap)
    cache = ProfileCache(family)
    buf = bytearray(n + 1)
    zeros = bytes(n + 1)
    row_bad = np.zeros(n + 1, dtype=np.int64)
    out = []
    total = 0
    for a in range(1, n + 1):
        _fill_column(buf, zeros, cache.minimal_moduli(a), n)
        col_vis = a - buf.count(1, 1, a + 1)
        row_vis = (a - 1) - int(row_bad[a])
        total += col_vis + row_vis
        out.append((a, total, total / (a * a)))
        row_bad += np.frombuffer(buf, dtype=np.uint8)
    return out


def brute_count(family: PolyFamily, n: int, cap: int | None = None) -> int:
    """Pointwise ground truth straight from the definition. Slow on purpose."""
    _check_n(n, cap)
    return sum(
        is_visible_direct(family, LatticePoint(a, b))
        for a in range(1, n + 1)
        for b in range(1, n + 1)
    )


def _ie_subsets(mods: list[int], n: int) -> int:
    """Literal inclusion-exclusion over all 2^k subsets; cross-check oracle."""

    def rec(i: int, l: int, sign: int) -> int:
        if i == len(mods):
            return sign * (n // l)
        return rec(i + 1, l, sign) + rec(i + 1, lcm(l, mods[i]), -sign)

    return rec(0, 1, 1)


def _ie_pruned(mods: list[int], n: int) -> int:
    """Same sum with zero terms skipped: once an lcm exceeds n, every superset
    contributes floor(n / lcm) = 0, so the branch is dropped whole."""
    total = 0

    def rec(i: int, l: int, sign: int) -> None:
        nonlocal total
        total += sign * (n // l)
        for j in range(i, len(mods)):
            l2 = lcm(l, mods[j])
            if l2 <= n:
                rec(j + 1, l2, -sign)

    rec(0, 1, 1)
    return total


def exact_count_ie(
    family: PolyFamily, n: int, mode: str = PRUNED_MODE, cap: int | None = None
) -> int:
    """Visible-pair count over [1,N]^2 by per-column inclusion-exclusion.

    Column a contributes sum over subsets J of its moduli of
    (-1)^|J| * floor(N / lcm J). Modes: "subset-enumeration" runs the sum
    literally over all 2^(a-1) subsets (capped at a <= 26); "pruned-lcm"
    dedupes moduli to the divisibility-minimal set and abandons branches
    whose lcm passes N. The two agree everywhere.
    """
    _check_n(n, cap)
    if mode not in (SUBSET_MODE, PRUNED_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == SUBSET_MODE and n > _SUBSET_COLUMN_CAP:
        raise ResourceLimitError(
            f"subset-enumeration is 2^(a-1) work per column; N={n} exceeds {_SUBSET_COLUMN_CAP}"
        )
    cache = ProfileCache(family)
    total = 0
    for a in range(1, n + 1):
        if mode == SUBSET_MODE:
            pa = cache.value(a)
            mods = [pa // gcd(pa, cache.value(t)) for t in range(1, a)]
            total += _ie_subsets(mods, n)
        else:
            mods = [m for m in cache.minimal_moduli(a) if m <= n]
            total += _ie_pruned(mods, n)
    return total


_RHO_VECTOR_MIN = 1024


def rho(family: PolyFamily, p: int) -> int:
    """Number of residues x mod p with P(x) = 0 mod p, by direct enumeration."""
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    if p < _RHO_VECTOR_MIN:
        return sum(1 for x in range(p) if family.eval(x) % p == 0)
    return _rho_vector(family, p)


def _rho_vector(family: PolyFamily, p: int) -> int:
    # Horner over all residues at once; values stay < p^2 + max coeff, well
    # inside int64 for any p this code bothers vectorizing.
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(family.coeffs):
        acc = (acc * xs + c) % p
    acc = acc * xs % p
    return int(np.count_nonzero(acc == 0))


def constant_cp(family: PolyFamily, prime_bound: int) -> ConstantResult:
    """Truncation of prod_p (1 - rho_P(p)/p^2) at primes <= prime_bound.

    Tail: |log shift from primes > B| <= deg(P) * sum_{m>B} 1/m^2 <= deg/(B-1).
    """
    if prime_bound < 2:
        raise ValueError(f"prime_bound must be >= 2, got {prime_bound}")
    value = 1.0
    for p in primes_up_to(prime_bound):
        value *= 1.0 - rho(family, p) / (p * p)
    return ConstantResult(value, prime_bound, family.degree / (prime_bound - 1))


def constant_cpq(p: int, q: int, prime_bound: int) -> ConstantResult:
    """(1 - 1/p^2)(1 - 1/q^2) * prod_{5 <= r <= B} (1 - 2/r^2) for primes p, q."""
    if prime_bound < 5:
        raise ValueError(f"prime_bound must be >= 5, got {prime_bound}")
    value = (1.0 - 1.0 / (p * p)) * (1.0 - 1.0 / (q * q))
    for r in primes_up_to(prime_bound):
        if r >= 5:
            value *= 1.0 - 2.0 / (r * r)
    return ConstantResult(value, prime_bound, 2.0 / (prime_bound - 1))


def constant_cpq_star(p: int, q: int, prime_bound: int) -> ConstantResult:
    """prod_{r | pq} (1 - 1/r^2) * prod_{r not | pq, r <= B} (1 - 2/r^2), gcd(p,q) = 1.

    The r | pq factors are taken exactly (from the factorization of pq, not
    the sieve), so they appear even when they exceed prime_bound.
    """
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} must be coprime")
    if prime_bound < 2:
        raise ValueError(f"prime_bound must be >= 2, got {prime_bound}")
    divisors = [r for r, _ in factorize(p * q)]
    value = 1.0
    for r in divisors:
        value *= 1.0 - 1.0 / (r * r)
    for r in primes_up_to(prime_bound):
        if r not in divisors:
            value *= 1.0 - 2.0 / (r * r)
    return ConstantResult(value, prime_bound, 2.0 / (prime_bound - 1))


def coprimality_count(family: PolyFamily, n: int, cap: int | None = None) -> int:
    """Pairs in [1,N]^2 with b coprime to every prime under column a's lcm.

    A subset of the visible pairs: being coprime to the lcm's prime support
    is sufficient for visibility, not necessary.
    """
    _check_n(n, cap)
    cache = ProfileCache(family)
    buf = bytearray(n + 1)
    zeros = bytes(n + 1)
    total = 0
    for a in range(1, n + 1):
        _fill_column(buf, zeros, cache.prime_set(a), n)
        total += n - buf.count(1, 1, n + 1)
    return total
