import math
import random

import pytest

from polyvis import (
    LatticePoint,
    ProfileCache,
    column_profile,
    gcd_p,
    is_visible,
    is_visible_direct,
    lcm_criterion,
    modulus,
    parse_family,
)

X = parse_family("1")
XSQ = parse_family("1,0")
XSQ_X = parse_family("1,1")


def test_modulus_values():
    assert modulus(X, 4, 2) == 2
    assert modulus(XSQ_X, 13, 6) == 13
    assert modulus(XSQ_X, 3, 1) == 6


def test_modulus_range_errors():
    for bad_t in (0, 4, 7, -1):
        with pytest.raises(ValueError):
            modulus(X, 4, bad_t)


def test_verdict_examples():
    v = is_visible(X, LatticePoint(2, 4))
    assert (v.visible, v.witness_t, v.witness_modulus) == (False, 1, 2)
    # gcd(P(2), 2) = 2 yet the point is visible: gcd certificate is one-way.
    v = is_visible(XSQ, LatticePoint(2, 2))
    assert v.visible and v.witness_t is None
    assert gcd_p(XSQ, LatticePoint(2, 2)) == 2


def test_column_one_always_visible(family):
    for b in (1, 2, 17, 360):
        assert is_visible(family, LatticePoint(1, b)).visible
        assert is_visible_direct(family, LatticePoint(1, b))


def test_witness_actually_blocks(family):
    """Any reported witness must satisfy the divisibility it claims."""
    rng = random.Random(sum(ord(c) for c in family.spec))
    for _ in range(300):
        a = rng.randrange(2, 80)
        b = rng.randrange(1, 300)
        v = is_visible(family, LatticePoint(a, b))
        if not v.visible:
            assert 1 <= v.witness_t < a
            assert modulus(family, a, v.witness_t) == v.witness_modulus
            assert b % v.witness_modulus == 0


def test_divisor_test_matches_rational_definition(family):
    for a in range(1, 26):
        for b in range(1, 81):
            pt = LatticePoint(a, b)
            assert is_visible(family, pt).visible == is_visible_direct(family, pt)


def test_divisor_test_matches_rational_definition_sampled(family):
    rng = random.Random(20_26)
    for _ in range(350):
        pt = LatticePoint(rng.randrange(1, 121), rng.randrange(1, 401))
        assert is_visible(family, pt).visible == is_visible_direct(family, pt)


def test_identity_family_reduces_to_coprimality():
    """Along y = qx the visible points are exactly the classically visible ones."""
    cache = ProfileCache(X)
    for a in range(1, 301):
        for b in range(1, 301):
            assert cache.is_visible(a, b) == (math.gcd(a, b) == 1)


def test_first_row_always_visible(family):
    cache = ProfileCache(family)
    assert all(cache.is_visible(a, 1) for a in range(1, 1001))


def test_certificate_chain(family):
    """gcd(P(a), b) = 1 implies the lcm test passes, which implies visible."""
    cache = ProfileCache(family)
    for a in range(1, 101):
        primes = cache.prime_set(a)
        for b in range(1, 101):
            passes_lcm = all(b % p for p in primes)
            if math.gcd(cache.value(a), b) == 1:
                assert passes_lcm
            if passes_lcm:
                assert cache.is_visible(a, b)
    rng = random.Random(7)
    for _ in range(60):
        a, b = rng.randrange(1, 101), rng.randrange(1, 101)
        expected = all(b % p for p in cache.prime_set(a))
        assert lcm_criterion(family, LatticePoint(a, b)) == expected


def test_minimal_moduli_block_the_same_points(family):
    """Dropping non-minimal moduli never changes which b get blocked."""
    for a in (2, 3, 7, 12, 30, 61):
        prof = column_profile(family, a)
        full = {m for _, m in prof.moduli}
        for b in range(1, 1001):
            blocked_full = any(b % m == 0 for m in full)
            blocked_min = any(b % m == 0 for m in prof.minimal_moduli)
            assert blocked_full == blocked_min


def test_prime_set_within_prime_support(family):
    from polyvis import factorize

    for a in range(2, 60):
        prof = column_profile(family, a)
        support = {p for p, _ in factorize(family.eval(a))}
        assert set(prof.lcm_prime_set) <= support


def test_column_profile_values():
    prof = column_profile(X, 6)
    assert tuple(m for _, m in prof.moduli) == (6, 3, 2, 3, 6)
    assert prof.minimal_moduli == (2, 3)
    assert prof.lcm_prime_set == (2, 3)

    prof = column_profile(XSQ_X, 3)
    assert prof.moduli == ((1, 6), (2, 2))
    assert prof.minimal_moduli == (2,)
    assert prof.lcm_prime_set == (2, 3)

    prof = column_profile(XSQ_X, 1)
    assert prof.moduli == () and prof.minimal_moduli == () and prof.lcm_prime_set == ()

    with pytest.raises(ValueError):
        column_profile(X, 0)


def test_profile_cache_consistent_and_idempotent(family):
    cache = ProfileCache(family)
    for a in (1, 2, 9, 40):
        assert cache.minimal_moduli(a) == column_profile(family, a).minimal_moduli
        assert cache.prime_set(a) == column_profile(family, a).lcm_prime_set
        assert cache.minimal_moduli(a) is cache.minimal_moduli(a)
        assert cache.prime_set(a) is cache.prime_set(a)
        assert cache.value(a) == family.eval(a)
    rng = random.Random(99)
    for _ in range(200):
        a, b = rng.randrange(1, 90), rng.randrange(1, 500)
        assert cache.is_visible(a, b) == is_visible(family, LatticePoint(a, b)).visible
