"""Purely periodic base-b digit expansions, block decompositions, and the digit oracle.

The oracle here is the ground truth the theorem-based tests in
:mod:`midy.analyzer` are checked against: it works straight from the digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .ntcore import MidyError, _check_pair, _order_int, divisors

_DIGIT36 = bytes.maketrans(
    bytes(range(36)), b"0123456789abcdefghijklmnopqrstuvwxyz"
)


@dataclass(frozen=True)
class PeriodExpansion:
    """One full period of numerator/modulus written in the given base."""

    numerator: int
    modulus: int
    base: int
    digits: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class BlockDecomposition:
    """A period cut into d blocks of k digits, each block read as a base-b integer."""

    d: int
    k: int
    blocks: tuple[int, ...]
    block_sum: int


def _check_fraction(x: int, n: int, b: int) -> None:
    _check_pair(b, n)
    if not 1 <= x < n or gcd(x, n) != 1:
        raise MidyError(f"numerator {x} is not a unit modulo {n}")


def expand(x: int, n: int, b: int) -> PeriodExpansion:
    """Digits of x/n in base b over one full period, by long division."""
    _check_fraction(x, n, b)
    e = _order_int(b, n)
    digs = []
    r = x
    for _ in range(e):
        a, r = divmod(r * b, n)
        digs.append(a)
    if r != x:  # unreachable: the remainder cycle closes after one period
        raise MidyError(f"expansion of {x}/{n} did not return to its start")
    return PeriodExpansion(numerator=x, modulus=n, base=b, digits=tuple(digs))


def period_integer(n: int, b: int) -> int:
    """The integer whose base-b digits are the period of 1/n."""
    _check_pair(b, n)
    e = _order_int(b, n)
    quotient, rem = divmod(b**e - 1, n)
    if rem:  # unreachable: n divides b**e - 1 by the choice of e
        raise MidyError(f"{n} does not divide {b}**{e} - 1")
    return quotient


def blocks(expansion: PeriodExpansion, d: int) -> BlockDecomposition:
    """Cut a period into d equal blocks and sum their base-b values."""
    e = len(expansion.digits)
    if d < 2:
        raise MidyError(f"block count must be >= 2, got {d}")
    if e % d:
        raise MidyError(f"block count {d} does not divide the period length {e}")
    k = e // d
    b = expansion.base
    vals = []
    for j in range(0, e, k):
        acc = 0
        for a in expansion.digits[j : j + k]:
            acc = acc * b + a
        vals.append(acc)
    return BlockDecomposition(d=d, k=k, blocks=tuple(vals), block_sum=sum(vals))


def _unit_numerators(n: int, b: int, fast: bool):
    # fast mode yields one representative per orbit x, x*b, x*b**2, ... mod n;
    # block sums along an orbit are all divisible by b**k - 1 or none are.
    if not fast:
        for x in range(1, n):
            if gcd(x, n) == 1:
                yield x
        return
    seen = bytearray(n)
    for x in range(1, n):
        if seen[x] or gcd(x, n) != 1:
            continue
        yield x
        y = x * b % n
        while y != x:
            seen[y] = 1
            y = y * b % n


def _valid_divisors(e: int) -> list[int]:
    return [d for d in divisors(e) if d >= 2]


def oracle_midy(n: int, b: int, d: int, mode: str = "all-x", fast: bool = False) -> bool:
    """Brute-force Midy test straight from the digit definition.

    In ``all-x`` mode every unit numerator is expanded and its block sum
    tested for divisibility by b**k - 1; ``x-equals-1`` tests the period
    integer of 1/n instead.  ``fast`` (all-x only) skips to one numerator per
    multiplicative orbit of b; the default sticks to the literal definition.
    """
    _check_pair(b, n)
    e = _order_int(b, n)
    if d < 2 or e % d:
        raise MidyError(f"d must be a divisor >= 2 of the period length {e}, got {d}")
    k = e // d
    modulus = b**k - 1
    if mode == "x-equals-1":
        return period_integer(n, b) % modulus == 0
    if mode != "all-x":
        raise MidyError(f"unknown oracle mode {mode!r}")
    for x in _unit_numerators(n, b, fast):
        if blocks(expand(x, n, b), d).block_sum % modulus:
            return False
    return True


def oracle_midy_sweep(
    n: int,
    b: int,
    ds: list[int] | None = None,
    mode: str = "all-x",
    fast: bool = False,
) -> dict[int, bool]:
    """``oracle_midy`` over several divisors at once, expanding each numerator once.

    Returns {d: verdict}.  With ds omitted, every divisor >= 2 of the period
    length is tested.  Identical in meaning to per-d calls, just cheaper.
    """
    _check_pair(b, n)
    e = _order_int(b, n)
    if ds is None:
        ds = _valid_divisors(e)
    ds = sorted(set(ds))
    for d in ds:
        if d < 2 or e % d:
            raise MidyError(f"d must be a divisor >= 2 of the period length {e}, got {d}")
    if mode == "x-equals-1":
        big = period_integer(n, b)
        return {d: big % (b ** (e // d) - 1) == 0 for d in ds}
    if mode != "all-x":
        raise MidyError(f"unknown oracle mode {mode!r}")
    moduli = {d: b ** (e // d) - 1 for d in ds}
    out = {d: True for d in ds}
    pending = set(ds)
    textual = b <= 36  # digit strings let int() do the block parsing in C
    for x in _unit_numerators(n, b, fast):
        if not pending:
            break
        r = x
        if textual:
            raw = bytearray(e)
            for i in range(e):
                raw[i], r = divmod(r * b, n)
            text = bytes(raw).translate(_DIGIT36).decode("ascii")
            for d in tuple(pending):
                k = e // d
                total = sum(int(text[j : j + k], b) for j in range(0, e, k))
                if total % moduli[d]:
                    out[d] = False
                    pending.discard(d)
        else:
            digs = []
            for _ in range(e):
                a, r = divmod(r * b, n)
                digs.append(a)
            for d in tuple(pending):
                k = e // d
                total = 0
                for j in range(0, e, k):
                    acc = 0
                    for a in digs[j : j + k]:
                        acc = acc * b + a
                    total += acc
                if total % moduli[d]:
                    out[d] = False
                    pending.discard(d)
    return out
