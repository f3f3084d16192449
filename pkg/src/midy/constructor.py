"""Constructive side: primitive-prime search, shrink factors, vanishing thresholds.

``shrink`` multiplies a modulus n by one factor per prime q of the period
length e so that every member of the resulting Midy set has the full q-part of
e; once all primes are pinned, the set is the singleton {e}.  Every step is
re-verified on the grown modulus before it is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .analyzer import MidySet, midy_set
from .ntcore import (
    MidyError,
    _check_pair,
    _nu_int,
    _order_int,
    divisors,
    factorize,
    is_prime,
    wieferich_level,
)
from .period import oracle_midy_sweep

BRANCH_P_NOT_DIVIDING = "p-not-dividing-N"
BRANCH_C_GE_S_PLUS_1 = "c-ge-s-plus-1"
BRANCH_C_LT_Q_DIVIDES = "c-lt-s-plus-1-q-divides-orderM"
BRANCH_C_LT_Q_NOT_DIVIDES = "c-lt-s-plus-1-q-not-divides-orderM"
BRANCH_Q2_C_EQ_S = "q2-c-eq-s"
BRANCH_Q2_S_GT_C = "q2-s-gt-c"
# Reachable for b = 2**g - 1 with g >= 2 even though the classical case split
# stops at c <= s: the 2-adic slack lets nu_2(n) exceed nu_2(e), and then every
# member is already pinned, so z = 1.
BRANCH_Q2_C_GT_S = "q2-c-gt-s"


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def primitive_prime(
    b: int, n: int, *, limit: int = 10_000_000, method: str = "auto"
) -> int | None:
    """Smallest prime p whose order of b is exactly n, or None when none exists.

    The exceptional pairs are n = 2 with b+1 a power of two, and (n, b) = (6, 2);
    everywhere else a prime exists, though with no usable bound on its size.
    ``scan`` walks candidates p = 1 (mod n) up to ``limit`` and errors when
    exhausted; ``cyclotomic`` factors the n-th cyclotomic value at b and
    filters its primes by order, exact but as costly as that factorization.
    ``auto`` scans a short prefix, takes the cyclotomic route only while its
    value is tractable (small, or itself prime: e.g. 12207031 for base 5 and
    n = 11 sits beyond any reasonable scan), then finishes the scan to
    ``limit`` before giving up.
    """
    if b < 2:
        raise MidyError(f"base must be >= 2, got {b}")
    if n < 2:
        raise MidyError(f"target order must be >= 2, got {n}")
    if n == 2 and _is_power_of_two(b + 1):
        return None
    if (n, b) == (6, 2):
        return None
    if method == "scan":
        return _primitive_scan(b, n, limit)
    if method == "cyclotomic":
        return _primitive_cyclotomic(b, n)
    if method == "auto":
        short = min(limit, 100_000)
        try:
            return _primitive_scan(b, n, short)
        except MidyError:
            value = _cyclotomic_value(n, b)
            if value.bit_length() <= 80 or is_prime(value):
                return _primitive_cyclotomic(b, n)
            if limit > short:
                return _primitive_scan(b, n, limit)
            raise
    raise MidyError(f"unknown search method {method!r}")


def _primitive_scan(b: int, n: int, limit: int) -> int:
    # any p with ord_p(b) = n satisfies p = 1 (mod n)
    strip = [q for q, _ in factorize(n).factors]
    for p in range(n + 1, limit + 1, n):
        if b % p == 0 or not is_prime(p):
            continue
        if pow(b, n, p) == 1 and all(pow(b, n // q, p) != 1 for q in strip):
            return p
    raise MidyError(f"no prime of order {n} for base {b} below {limit}; raise the limit")


def _mobius(n: int) -> int:
    mu = 1
    for _, e in factorize(n).factors:
        if e > 1:
            return 0
        mu = -mu
    return mu


def _cyclotomic_value(n: int, b: int) -> int:
    num = den = 1
    for d in divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num *= b**d - 1
        elif mu == -1:
            den *= b**d - 1
    value, rem = divmod(num, den)
    if rem:  # unreachable: the product telescopes exactly
        raise MidyError("cyclotomic product failed to divide")
    return value


def _primitive_cyclotomic(b: int, n: int) -> int:
    for p, _ in factorize(_cyclotomic_value(n, b)).factors:  # ascending
        if b % p and _order_int(b, p) == n:
            return p
    raise MidyError(f"no prime of order {n} divides the cyclotomic value at {b}")


# ---------------------------------------------------------------------------
# shrink

@dataclass(frozen=True)
class ShrinkStep:
    """One per-prime multiplier pinning nu_q of every surviving member to nu_q(e).

    p is the auxiliary prime of order q (absent on the q = 2 exceptional
    branches); c = nu_p(n), s = nu_p(e), m the lifting level of (b, p).  delta
    and epsilon are diagnostic only: max(0, c-m) and max(0, s-m+1).
    """

    q: int
    branch: str
    p: int | None
    c: int
    s: int
    m: int | None
    z: int
    delta: int | None = None
    epsilon: int | None = None


@dataclass(frozen=True)
class ShrinkResult:
    modulus: int
    base: int
    steps: tuple[ShrinkStep, ...]
    z: int
    final_set: MidySet

    @property
    def shrunk_modulus(self) -> int:
        return self.z * self.modulus


def shrink_step(n: int, b: int, q: int) -> ShrinkStep:
    """Multiplier z for one prime q of the period length e.

    After passing to z*n the period keeps its length, the Midy set stays
    nonempty, and every member d has nu_q(d) = nu_q(e).  All three properties
    are re-verified on z*n before the step is returned.
    """
    _check_pair(b, n)
    if not is_prime(q):
        raise MidyError(f"{q} is not prime")
    e = _order_int(b, n)
    if e % q:
        raise MidyError(f"{q} does not divide the period length {e}")
    if not midy_set(n, b).members:
        raise MidyError(f"the Midy set of {n} to base {b} is empty; nothing to pin")

    if q != 2 or not _is_power_of_two(b + 1):
        p = primitive_prime(b, q)
        # q is prime and, on this branch, not the (2, power-of-two) exception,
        # so a prime of order q always exists; it is odd since ord_2(b) = 1.
        c = _nu_int(p, n)
        s = _nu_int(p, e)
        m = wieferich_level(b, p)
        if c == 0:
            branch, z = BRANCH_P_NOT_DIVIDING, p ** (s + 1)
        elif c >= s + 1:
            branch, z = BRANCH_C_GE_S_PLUS_1, 1
        else:
            cofactor = n // p**c
            if _order_int(b, cofactor) % q == 0:
                branch = BRANCH_C_LT_Q_DIVIDES
            else:
                branch = BRANCH_C_LT_Q_NOT_DIVIDES
            z = p ** (s - c + 1)
        step = ShrinkStep(
            q=q, branch=branch, p=p, c=c, s=s, m=m, z=z,
            delta=max(0, c - m), epsilon=max(0, s - m + 1),
        )
    else:
        c = _nu_int(2, n)
        s = _nu_int(2, e)
        if c == s:
            branch, z = BRANCH_Q2_C_EQ_S, 1
        elif s > c:
            branch, z = BRANCH_Q2_S_GT_C, 2 ** (s - c)
        else:
            branch, z = BRANCH_Q2_C_GT_S, 1
        step = ShrinkStep(q=q, branch=branch, p=None, c=c, s=s, m=None, z=z)

    _verify_step(n, b, q, e, step.z)
    return step


def _verify_step(n: int, b: int, q: int, e: int, z: int) -> None:
    zn = z * n
    if _order_int(b, zn) != e:
        raise MidyError(f"shrink step for q={q} changed the period length; construction bug")
    shrunk = midy_set(zn, b)
    if not shrunk.members:
        raise MidyError(f"shrink step for q={q} emptied the Midy set; construction bug")
    pin = _nu_int(q, e)
    for d in shrunk.members:
        if _nu_int(q, d) != pin:
            raise MidyError(
                f"shrink step for q={q} left member {d} unpinned; construction bug"
            )


def shrink(n: int, b: int, *, oracle_bound: int = 1_000_000) -> ShrinkResult:
    """Multiplier z for which the Midy set of z*n collapses to {period length}.

    Runs one shrink_step per prime of the period length, feeding the grown
    modulus forward.  The final set is recomputed with the fast test and, when
    z*n stays within oracle_bound, re-checked against the digit oracle.  A set
    that is already the singleton returns z = 1 untouched.
    """
    _check_pair(b, n)
    start = midy_set(n, b)
    if not start.members:
        raise MidyError(
            f"the Midy set of {n} to base {b} is empty; no multiplier can collapse it"
        )
    e = start.order
    if start.members == (e,):
        return ShrinkResult(modulus=n, base=b, steps=(), z=1, final_set=start)
    steps = []
    current = n
    for q, _ in factorize(e).factors:
        step = shrink_step(current, b, q)
        steps.append(step)
        current *= step.z
    final = midy_set(current, b)
    if final.members != (e,):
        raise MidyError("shrink did not collapse the set to the singleton; construction bug")
    if current <= oracle_bound:
        against = oracle_midy_sweep(current, b)
        if any(flag != (d == e) for d, flag in against.items()):
            raise MidyError("digit oracle disagrees with the fast test on the shrunk modulus")
    z = 1
    for step in steps:
        z *= step.z
    return ShrinkResult(modulus=n, base=b, steps=tuple(steps), z=z, final_set=final)


def minimal_shrink_multiplier(n: int, b: int, *, cap: int = 200_000) -> int:
    """Brute-force the smallest z collapsing the set, bounded by the constructed one.

    The construction makes no minimality promise; this sweep is for small
    inputs only and refuses to run when the constructed z exceeds ``cap``.
    """
    built = shrink(n, b)
    e = built.final_set.order
    if built.z > cap:
        raise MidyError(f"constructed multiplier {built.z} exceeds the sweep cap {cap}")
    for cand in range(1, built.z):
        if gcd(cand, b) != 1:
            continue
        if _order_int(b, cand * n) != e:
            continue
        if midy_set(cand * n, b).members == (e,):
            return cand
    return built.z


# ---------------------------------------------------------------------------
# vanishing for primes of b - 1

def vanish_threshold(n: int, b: int, p: int) -> int:
    """Threshold T: the Midy set of p**t * n is empty for every t > T.

    For odd p (or b = 1 mod 4) this is the closed form s - nu_p(n) clamped at
    zero, with s the p-part of the period length of the p-free part of n; the
    set at T itself is then nonempty whenever the p-free part's set is.  For
    p = 2 with b = 3 (mod 4) the block-count quotient absorbs extra twos and
    the closed form undershoots, so T comes from a bounded exact sweep and is
    the true largest nonempty exponent (0 if every exponent is empty).
    """
    if b < 2:
        raise MidyError(f"base must be >= 2, got {b}")
    if not is_prime(p):
        raise MidyError(f"{p} is not prime")
    if (b - 1) % p:
        raise MidyError(f"{p} does not divide base - 1 = {b - 1}")
    if n < 1:
        raise MidyError(f"modulus must be >= 1, got {n}")
    if gcd(n, b) != 1:
        raise MidyError(f"modulus {n} and base {b} are not coprime")
    a = _nu_int(p, n)
    core = n // p**a
    s = _nu_int(p, _order_int(b, core))
    if p != 2 or b % 4 == 1:
        return max(0, s - a)
    # p = 2, b = 3 (mod 4): a nonempty set at exponent u forces
    # u <= max(nu_2(ord mod 2**u), s) + nu_2(b+1) - 1, which bounds u.
    gamma = _nu_int(2, b + 1)
    bound = max(gamma + 1, s + gamma - 1)
    best = None
    for u in range(bound + 1):
        if midy_set(2**u * core, b).members:
            best = u
    if best is None:
        return 0
    return max(0, best - a)
