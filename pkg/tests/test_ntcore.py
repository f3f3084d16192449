import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from midy.ntcore import (
    MidyError,
    divisors,
    factorize,
    is_prime,
    lifted_order,
    mod_pow,
    multiplicative_order,
    nu,
    primes_upto,
    wieferich_level,
)


def brute_order(b, n):
    e, x = 1, b % n
    while x != 1:
        x = x * b % n
        e += 1
    return e


def brute_factor(n):
    out = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# primality / sieve

def test_primes_upto_matches_trial_division():
    naive = [n for n in range(2, 500) if all(n % f for f in range(2, n))]
    assert primes_upto(499) == naive


def test_is_prime_small_range():
    marked = set(primes_upto(10_000))
    for n in range(-3, 10_000):
        assert is_prime(n) == (n in marked)


def test_is_prime_larger_samples():
    assert is_prime(9901)
    assert is_prime(56598313)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # 193707721 * 761838257287
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


# ---------------------------------------------------------------------------
# factorize

def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(1316833).factors == ((7, 1), (19, 1), (9901, 1))
    assert factorize(49).factors == ((7, 2),)


def test_factorize_rejects_nonpositive():
    with pytest.raises(MidyError):
        factorize(0)
    with pytest.raises(MidyError):
        factorize(-6)


def test_factorize_reconstructs_small():
    for n in range(1, 3000):
        fac = factorize(n)
        prod = 1
        for p, e in fac.factors:
            prod *= p**e
        assert prod == n
        assert fac.factors == brute_factor(n)


def test_factorize_reconstructs_blocks():
    spans = [range(10**5 - 2000, 10**5 + 1), range(10**6 - 500, 10**6 + 1)]
    for span in spans:
        for n in span:
            fac = factorize(n)
            prod = 1
            prev = 1
            for p, e in fac.factors:
                assert p > prev and e >= 1 and is_prime(p)
                prev = p
                prod *= p**e
            assert prod == n


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**12))
def test_factorize_reconstructs_random(n):
    fac = factorize(n)
    prod = 1
    prev = 1
    for p, e in fac.factors:
        assert p > prev and e >= 1 and is_prime(p)
        prev = p
        prod *= p**e
    assert prod == n


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(36) == (1, 2, 3, 4, 6, 9, 12, 18, 36)
    assert factorize(42).divisors() == (1, 2, 3, 6, 7, 14, 21, 42)


# ---------------------------------------------------------------------------
# nu

def test_nu_examples():
    assert nu(3, 9) == 2
    assert nu(3, 10**1 - 1) == 2
    assert nu(7, 1316833) == 1
    assert nu(5, 7) == 0
    assert nu(2, 1) == 0


def test_nu_rejects_nonprime_p():
    with pytest.raises(MidyError):
        nu(4, 8)
    with pytest.raises(MidyError):
        nu(1, 5)


def test_nu_against_division_oracle():
    for p in (2, 3, 7, 19):
        for n in range(1, 400):
            e = 0
            m = n
            while m % p == 0:
                m //= p
                e += 1
            assert nu(p, n) == e


# ---------------------------------------------------------------------------
# mod_pow

def test_mod_pow_examples():
    assert mod_pow(10, 6, 13) == 1
    assert mod_pow(7, 0, 11) == 1
    # repeated multiplication oracle
    acc = 1
    for _ in range(3):
        acc = acc * 10 % 13
    assert mod_pow(10, 3, 13) == acc == 12


def test_mod_pow_rejects_bad_args():
    with pytest.raises(MidyError):
        mod_pow(10, 3, 1)
    with pytest.raises(MidyError):
        mod_pow(10, -1, 13)


# ---------------------------------------------------------------------------
# multiplicative order

def test_order_examples():
    assert multiplicative_order(10, 13).order == 6
    assert multiplicative_order(10, 49).order == 42
    assert multiplicative_order(10, 1316833).order == 36


def test_order_rejects_shared_factor():
    with pytest.raises(MidyError):
        multiplicative_order(10, 14)
    with pytest.raises(MidyError):
        multiplicative_order(10, 1)


def test_order_matches_brute_force():
    from math import gcd

    for b in range(2, 13):
        for n in range(2, 250):
            if gcd(b, n) == 1:
                assert multiplicative_order(b, n).order == brute_order(b, n)


def test_order_minimality_sweep():
    # b**e = 1 and stripping any single prime of e breaks the congruence
    from math import gcd

    for b in range(2, 13):
        for n in range(2, 2001):
            if gcd(b, n) != 1:
                continue
            e = multiplicative_order(b, n).order
            assert pow(b, e, n) == 1
            for q, _ in factorize(e).factors:
                assert pow(b, e // q, n) != 1


# ---------------------------------------------------------------------------
# wieferich level and order lifting

def test_wieferich_examples():
    assert wieferich_level(10, 3) == 2
    assert wieferich_level(10, 487) == 2
    assert wieferich_level(68, 113) == 3
    assert wieferich_level(42, 23) == 3
    assert wieferich_level(10, 7) == 1


def test_wieferich_rejects_bad_args():
    with pytest.raises(MidyError):
        wieferich_level(10, 2)
    with pytest.raises(MidyError):
        wieferich_level(10, 5)
    with pytest.raises(MidyError):
        wieferich_level(10, 9)


def test_wieferich_cap():
    with pytest.raises(MidyError):
        wieferich_level(10, 3, max_level=1)


def test_wieferich_mostly_one():
    count_above = 0
    for p in primes_upto(500):
        if p in (2, 5):
            continue
        level = wieferich_level(10, p)
        assert level >= 1
        if level > 1:
            count_above += 1
            assert p in (3, 487)
    assert count_above == 2  # exactly 3 and 487 below 500


def test_lifted_order_examples():
    assert lifted_order(68, 113, 3) == multiplicative_order(68, 113).order
    assert lifted_order(42, 23, 3) == multiplicative_order(42, 23).order
    assert lifted_order(10, 3, 1) == 1
    assert lifted_order(10, 3, 5) == 27


def test_lifted_order_matches_direct():
    for b in (2, 10):
        for p in primes_upto(500):
            if p == 2 or b % p == 0:
                continue
            for t in range(1, 5):
                assert lifted_order(b, p, t) == multiplicative_order(b, p**t).order


def test_lifted_order_rejects_bad_args():
    with pytest.raises(MidyError):
        lifted_order(10, 2, 3)
    with pytest.raises(MidyError):
        lifted_order(10, 3, 0)
