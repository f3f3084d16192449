"""Fast membership tests, Midy-set enumeration, multipliers, and set structure.

Membership rests on the exact divisibility criterion

    d in M_b(n)  <=>  n | (b**e - 1) // (b**k - 1),   e = ord_n(b), k = e // d,

checked prime by prime without ever materializing b**k - 1.  For an odd prime
p of n with ord_p(b) | k the quotient carries exactly nu_p(d) factors of p
(lifting the exponent).  The 2-adic case needs care: for odd b and even d the
quotient absorbs nu_2(d) + nu_2(b**k + 1) - 1 twos, one more than nu_2(d)
whenever k is odd and b = 3 (mod 4).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .ntcore import (
    MidyError,
    _check_pair,
    _nu_int,
    _order_int,
    divisors,
    factorize,
    is_prime,
    lifted_order,
    wieferich_level,
)


@dataclass(frozen=True)
class FailureCertificate:
    """Witness prime against membership: the modulus carries more of it than d absorbs."""

    prime: int
    nu_modulus: int
    nu_d: int
    two_adic_slack: int = 0  # extra absorption at p = 2; zero at odd primes


@dataclass(frozen=True)
class MidyVerdict:
    modulus: int
    base: int
    d: int
    k: int
    member: bool
    certificate: FailureCertificate | None = None


@dataclass
class MidySet:
    """All block counts d for which the modulus has the block-sum property."""

    modulus: int
    base: int
    order: int
    members: tuple[int, ...]
    multipliers: dict[int, int] = field(default_factory=dict)

    def __contains__(self, d: int) -> bool:
        return d in self.members


def _quotient_valuation(p: int, b: int, k: int, d: int) -> int:
    """nu_p of (b**(k*d) - 1) // (b**k - 1), given that p divides b**k - 1."""
    if p != 2:
        return _nu_int(p, d)
    if d % 2:
        return 0
    return _nu_int(2, d) + (_nu_int(2, b + 1) - 1 if k % 2 else 0)


def _checked_k(n: int, b: int, d: int) -> tuple[int, int]:
    _check_pair(b, n)
    e = _order_int(b, n)
    if d < 2 or e % d:
        raise MidyError(f"d must be a divisor >= 2 of the period length {e}, got {d}")
    return e, e // d


def check_midy(n: int, b: int, d: int) -> MidyVerdict:
    """Decide membership by sweeping the prime divisors of the modulus.

    A prime p of n only matters when its order divides k (tested as
    b**k = 1 mod p); it kills membership when nu_p(n) exceeds the valuation
    the block-count quotient can absorb.
    """
    _, k = _checked_k(n, b, d)
    for p, a in factorize(n).factors:
        if pow(b, k, p) != 1:
            continue
        allowed = _quotient_valuation(p, b, k, d)
        if a > allowed:
            nu_d = _nu_int(p, d)
            return MidyVerdict(
                n, b, d, k, False,
                FailureCertificate(p, a, nu_d, allowed - nu_d),
            )
    return MidyVerdict(n, b, d, k, True)


def check_midy_gcd(n: int, b: int, d: int) -> MidyVerdict:
    """Same verdict via the primes of gcd(b**k - 1, n), found by modular reduction."""
    _, k = _checked_k(n, b, d)
    g = gcd(pow(b, k, n) - 1, n)
    for p, _ in factorize(g).factors:
        a = _nu_int(p, n)
        allowed = _quotient_valuation(p, b, k, d)
        if a > allowed:
            nu_d = _nu_int(p, d)
            return MidyVerdict(
                n, b, d, k, False,
                FailureCertificate(p, a, nu_d, allowed - nu_d),
            )
    return MidyVerdict(n, b, d, k, True)


def midy_set(n: int, b: int, exploit_closure: bool = True) -> MidySet:
    """Every divisor d >= 2 of the period length that passes check_midy.

    Membership is upward closed along the divisor lattice of the period
    length, so with exploit_closure multiples of accepted members are taken
    without re-checking.  The degenerate modulus 1 yields the empty set.
    """
    if n == 1:
        if b < 2:
            raise MidyError(f"base must be >= 2, got {b}")
        return MidySet(modulus=1, base=b, order=1, members=())
    _check_pair(b, n)
    e = _order_int(b, n)
    members: list[int] = []
    for d in divisors(e):
        if d < 2:
            continue
        if exploit_closure and any(d % prev == 0 for prev in members):
            members.append(d)
            continue
        if check_midy(n, b, d).member:
            members.append(d)
    return MidySet(modulus=n, base=b, order=e, members=tuple(members))


def multiplier(n: int, b: int, d: int) -> int:
    """m with sum_{i=1..d} (b**(i*k) mod n) = m*n; defined only for members."""
    verdict = check_midy(n, b, d)
    if not verdict.member:
        raise MidyError(
            f"{d} is not in the Midy set of {n} to base {b}; the multiplier is undefined"
        )
    step = pow(b, verdict.k, n)
    total, cur = 0, 1
    for _ in range(d):
        cur = cur * step % n
        total += cur
    m, rem = divmod(total, n)
    if rem:  # unreachable for members
        raise MidyError("multiplier sum failed to divide; membership logic is broken")
    return m


def attach_multipliers(ms: MidySet) -> MidySet:
    """Fill the multiplier map of a MidySet in place (and return it)."""
    for d in ms.members:
        ms.multipliers.setdefault(d, multiplier(ms.modulus, ms.base, d))
    return ms


# ---------------------------------------------------------------------------
# coset structure of the powers of b

@dataclass(frozen=True)
class CosetDecomposition:
    """The cyclic group <b**k2> mod n written as c translates of <b**k1>."""

    modulus: int
    base: int
    k1: int
    k2: int
    c: int
    cosets: tuple[tuple[int, ...], ...]

    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for coset in self.cosets:
            out.update(coset)
        return frozenset(out)


def coset_decompose(n: int, b: int, k1: int, k2: int) -> CosetDecomposition:
    """Translates b**(r*k2) * <b**k1> for r = 0..c-1, whose union is <b**k2>.

    Requires both k1 and k2 to divide the period length e, with e//k1 dividing
    e//k2 (equivalently k2 | k1).  Cosets are kept as sequences, so repeated
    residues inside one translate stay visible.
    """
    _check_pair(b, n)
    e = _order_int(b, n)
    if k1 < 1 or k2 < 1 or e % k1 or e % k2:
        raise MidyError(f"k1 and k2 must divide the period length {e}, got {k1}, {k2}")
    d1, d2 = e // k1, e // k2
    if d2 % d1:
        raise MidyError(f"{d1} must divide {d2} for a coset decomposition")
    c = d2 // d1
    step = pow(b, k1, n)
    subgroup = []
    cur = 1
    for _ in range(d1):
        subgroup.append(cur)
        cur = cur * step % n
    cosets = []
    for r in range(c):
        t = pow(b, r * k2, n)
        cosets.append(tuple(t * s % n for s in subgroup))
    return CosetDecomposition(
        modulus=n, base=b, k1=k1, k2=k2, c=c, cosets=tuple(cosets)
    )


# ---------------------------------------------------------------------------
# prime powers

def _check_prime_power_args(b: int, p: int, n: int) -> None:
    if b < 2:
        raise MidyError(f"base must be >= 2, got {b}")
    if p == 2 or not is_prime(p):
        raise MidyError(f"{p} must be an odd prime")
    if b % p == 0:
        raise MidyError(f"{p} divides the base {b}")
    if n < 1:
        raise MidyError(f"exponent must be >= 1, got {n}")


def prime_power_set(b: int, p: int, n: int) -> MidySet:
    """Midy set of p**n assembled from the set of p plus order lifting.

    The set of a prime is every divisor >= 2 of its period length; past the
    lifting level m each extra power of p scales a copy of that set by p.
    """
    _check_prime_power_args(b, p, n)
    base_members = [d for d in divisors(_order_int(b, p)) if d >= 2]
    m = wieferich_level(b, p)
    if n <= m:
        members = tuple(base_members)
    else:
        members = tuple(
            sorted({p ** (n - m - i) * d for i in range(n - m + 1) for d in base_members})
        )
    return MidySet(modulus=p**n, base=b, order=lifted_order(b, p, n), members=members)


@dataclass(frozen=True)
class CardinalityReport:
    """Closed-form size of a prime-power Midy set next to the enumerated truth."""

    closed_form: int
    actual: int
    disjoint: bool


def cardinality_report(b: int, p: int, n: int) -> CardinalityReport:
    """Closed-form count with a runtime check that the scaled copies are disjoint."""
    _check_prime_power_args(b, p, n)
    base_count = sum(1 for d in divisors(_order_int(b, p)) if d >= 2)
    m = wieferich_level(b, p)
    closed = base_count if n <= m else (n - m + 1) * base_count
    actual = len(prime_power_set(b, p, n).members)
    return CardinalityReport(closed_form=closed, actual=actual, disjoint=closed == actual)


def cardinality_prime_power(b: int, p: int, n: int) -> int:
    """Closed-form |Midy set of p**n|; see cardinality_report for the cross-check."""
    return cardinality_report(b, p, n).closed_form


# ---------------------------------------------------------------------------
# products and restriction

@dataclass(frozen=True)
class RestrictionReport:
    """Members of the larger modulus restricted to a divisor of it."""

    n1: int
    n2: int
    base: int
    candidates: tuple[int, ...]
    violations: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def restrict_set(n1: int, n2: int, b: int) -> RestrictionReport:
    """Check that members of M_b(n2) dividing the period length of n1 restrict to n1.

    Requires n1 | n2; a violated precondition raises rather than reporting a
    failed inclusion.
    """
    _check_pair(b, n1)
    _check_pair(b, n2)
    if n2 % n1:
        raise MidyError(f"{n1} must divide {n2}")
    e1 = _order_int(b, n1)
    candidates = tuple(d for d in midy_set(n2, b).members if e1 % d == 0)
    violations = tuple(d for d in candidates if not check_midy(n1, b, d).member)
    return RestrictionReport(
        n1=n1, n2=n2, base=b, candidates=candidates, violations=violations
    )


def product_set(n: int, m: int, b: int) -> MidySet:
    """Midy set of m*n filtered out of the set of n (coprime m, equal orders).

    A member d of M_b(n) survives unless some prime r of m with ord_r(b) | k
    packs more of r into m than the block-count quotient absorbs.
    """
    _check_pair(b, n)
    if m < 1:
        raise MidyError(f"cofactor must be >= 1, got {m}")
    if gcd(m, n) != 1:
        raise MidyError(f"{m} and {n} must be coprime")
    if gcd(m, b) != 1:
        raise MidyError(f"cofactor {m} must be coprime to the base {b}")
    e = _order_int(b, n)
    if _order_int(b, m * n) != e:
        raise MidyError(
            f"multiplying by {m} changes the period length of {n}; the filter does not apply"
        )
    mfactors = factorize(m).factors
    members = []
    for d in midy_set(n, b).members:
        k = e // d
        ok = True
        for r, a in mfactors:
            if pow(b, k, r) == 1 and a > _quotient_valuation(r, b, k, d):
                ok = False
                break
        if ok:
            members.append(d)
    return MidySet(modulus=m * n, base=b, order=e, members=tuple(members))
