"""Exact integer arithmetic: primality, factorization, orders, valuations, lifting.

Everything here works on arbitrary-precision ints and is a pure function of its
arguments; the lru caches are transparent (idempotent, safe under races).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, lcm


class MidyError(ValueError):
    """Raised when an operation's precondition fails or a verification step trips."""


# ---------------------------------------------------------------------------
# primality and prime generation

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Miller-Rabin with the first twelve prime bases is deterministic below this bound.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, by a byte sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: deterministic below ~3.3e24, strong probable prime beyond."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_BOUND:
        import random

        rng = random.Random(n)
        bases = _MR_BASES + tuple(rng.randrange(2, n - 1) for _ in range(24))
    return _miller_rabin(n, bases)


_SMALL_PRIMES = tuple(primes_upto(10_000))


# ---------------------------------------------------------------------------
# factorization

def _pollard_brent(n: int) -> int:
    """A nontrivial factor of an odd composite n (Brent's cycle method).

    The polynomial offsets c are tried in a fixed order, so the result is
    deterministic.
    """
    for c in range(1, 2000):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise MidyError(f"factor search failed for {n}")  # pragma: no cover


@lru_cache(maxsize=None)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            d = _pollard_brent(m)
            stack.append(d)
            stack.append(m // d)
    return tuple(sorted(counts.items()))


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its prime factorization, primes ascending."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def nu(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> tuple[int, ...]:
        out = [1]
        for p, e in self.factors:
            out = [d * p**i for d in out for i in range(e + 1)]
        return tuple(sorted(out))


def factorize(n: int) -> Factorization:
    """Prime factorization of n >= 1 (empty factor list for n = 1)."""
    if n < 1:
        raise MidyError(f"cannot factor {n}: need a positive integer")
    return Factorization(n, _factor_pairs(n))


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    return factorize(n).divisors()


# ---------------------------------------------------------------------------
# valuations

def _nu_int(p: int, n: int) -> int:
    # valuation without the primality check; p >= 2, n >= 1
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def nu(p: int, n: int) -> int:
    """Exponent of the prime p in n."""
    if not is_prime(p):
        raise MidyError(f"{p} is not prime")
    if n < 1:
        raise MidyError(f"valuation needs a positive integer, got {n}")
    return _nu_int(p, n)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced into [0, modulus), by square-and-multiply."""
    if modulus < 2:
        raise MidyError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise MidyError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


# ---------------------------------------------------------------------------
# multiplicative order and its lifting to prime powers

def _lambda_prime_power(p: int, e: int) -> int:
    if p == 2:
        if e == 1:
            return 1
        if e == 2:
            return 2
        return 1 << (e - 2)
    return (p - 1) * p ** (e - 1)


def _group_exponent(n: int) -> int:
    out = 1
    for p, e in _factor_pairs(n):
        out = lcm(out, _lambda_prime_power(p, e))
    return out


@lru_cache(maxsize=None)
def _order_int(b: int, n: int) -> int:
    # least e >= 1 with b**e = 1 (mod n); caller guarantees gcd(b, n) == 1.
    # Start from the group exponent (a known multiple) and strip primes.
    if n == 1:
        return 1
    e = _group_exponent(n)
    for q, _ in _factor_pairs(e):
        while e % q == 0 and pow(b, e // q, n) == 1:
            e //= q
    return e


@dataclass(frozen=True)
class OrderProfile:
    """The least exponent sending base to 1 in the units modulo modulus."""

    base: int
    modulus: int
    order: int


def _check_pair(b: int, n: int) -> None:
    if b < 2:
        raise MidyError(f"base must be >= 2, got {b}")
    if n < 2:
        raise MidyError(f"modulus must be >= 2, got {n}")
    if gcd(b, n) != 1:
        raise MidyError(f"base {b} and modulus {n} are not coprime")


def multiplicative_order(b: int, n: int) -> OrderProfile:
    """Least e with b**e = 1 (mod n), via group-exponent divisor descent."""
    _check_pair(b, n)
    return OrderProfile(base=b, modulus=n, order=_order_int(b, n))


def _check_odd_prime(b: int, p: int) -> None:
    if b < 2:
        raise MidyError(f"base must be >= 2, got {b}")
    if p == 2 or not is_prime(p):
        raise MidyError(f"{p} must be an odd prime")
    if b % p == 0:
        raise MidyError(f"{p} divides the base {b}")


def wieferich_level(b: int, p: int, max_level: int = 64) -> int:
    """Largest m with b**ord = 1 (mod p**m), where ord is the order of b mod p.

    Tests successive prime powers modularly; the value b**ord - 1 itself is
    never materialized.  Almost always 1; the search caps at max_level.
    """
    _check_odd_prime(b, p)
    o = _order_int(b, p)
    m = 1
    mod = p * p
    while pow(b, o, mod) == 1:
        m += 1
        if m > max_level:
            raise MidyError(
                f"lifting level of base {b} at prime {p} exceeds the cap {max_level}"
            )
        mod *= p
    return m


def lifted_order(b: int, p: int, t: int) -> int:
    """Order of b modulo p**t by the closed lifting form.

    Equals the order mod p while t stays at or below the lifting level m, and
    grows by a factor p for each step beyond it.
    """
    _check_odd_prime(b, p)
    if t < 1:
        raise MidyError(f"exponent must be >= 1, got {t}")
    o = _order_int(b, p)
    m = wieferich_level(b, p)
    return o if t <= m else p ** (t - m) * o
