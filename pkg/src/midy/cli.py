"""Command-line front end.

Every command prints either human-readable text or, with --json, a single
structured document {command, inputs, result, oracle_checked, elapsed_ms}
carrying the same values.  Exit codes: 0 success, 1 domain error or failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from time import perf_counter

from . import analyzer, constructor, period, verify
from .ntcore import MidyError, multiplicative_order

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


def render_digits(digits, base: int) -> str:
    """Alphanumeric digit string for base <= 36, dot-separated values beyond."""
    if base <= 36:
        return "".join(_ALPHABET[a] for a in digits)
    return ".".join(str(a) for a in digits)


def _render_block(value: int, base: int, width: int) -> str:
    if base > 36:
        out = []
        for _ in range(width):
            value, a = divmod(value, base)
            out.append(str(a))
        return ".".join(reversed(out))
    out = []
    for _ in range(width):
        value, a = divmod(value, base)
        out.append(_ALPHABET[a])
    return "".join(reversed(out))


def _format_set(members) -> str:
    return "{" + ", ".join(str(d) for d in members) + "}"


# ---------------------------------------------------------------------------
# command handlers: each returns (inputs, result, text_lines, oracle_checked)

def _cmd_order(args):
    profile = multiplicative_order(args.base, args.n)
    inputs = {"base": args.base, "n": args.n}
    return inputs, profile.order, [str(profile.order)], False


def _cmd_period(args):
    expansion = period.expand(args.x, args.n, args.base)
    rendered = render_digits(expansion.digits, args.base)
    result = {
        "digits": rendered,
        "period_length": expansion.period_length,
    }
    lines = [f"0.({rendered})"]
    if args.blocks is not None:
        dec = period.blocks(expansion, args.blocks)
        shown = [_render_block(v, args.base, dec.k) for v in dec.blocks]
        result["blocks"] = shown
        result["block_sum"] = dec.block_sum
        lines.append(f"{' '.join(shown)}, sum {dec.block_sum}")
    inputs = {"base": args.base, "n": args.n, "x": args.x, "blocks": args.blocks}
    return inputs, result, lines, False


def _cmd_set(args):
    ms = analyzer.midy_set(args.n, args.base)
    result = {"order": ms.order, "members": list(ms.members)}
    lines = [
        f"order {ms.order}",
        f"midy set of {args.n} to base {args.base}: {_format_set(ms.members)}",
    ]
    if args.multipliers:
        analyzer.attach_multipliers(ms)
        result["multipliers"] = {str(d): ms.multipliers[d] for d in ms.members}
        for d in ms.members:
            lines.append(f"  d={d}: multiplier {ms.multipliers[d]}")
    oracle_checked = False
    if args.oracle:
        against = period.oracle_midy_sweep(args.n, args.base, fast=args.fast_oracle)
        wanted = {d: d in ms.members for d in against}
        if against != wanted:
            raise MidyError(
                f"digit oracle disagrees with the fast test on {args.n} base {args.base}"
            )
        oracle_checked = True
        lines.append("oracle check: ok")
    inputs = {
        "base": args.base,
        "n": args.n,
        "oracle": args.oracle,
        "multipliers": args.multipliers,
    }
    return inputs, result, lines, oracle_checked


def _cmd_check(args):
    verdict = analyzer.check_midy(args.n, args.base, args.d)
    result = {"member": verdict.member, "k": verdict.k}
    lines = [f"d={args.d}: {'member' if verdict.member else 'not a member'} (k={verdict.k})"]
    if verdict.certificate is not None:
        cert = verdict.certificate
        result["certificate"] = {
            "prime": cert.prime,
            "nu_modulus": cert.nu_modulus,
            "nu_d": cert.nu_d,
            "two_adic_slack": cert.two_adic_slack,
        }
        lines.append(
            f"witness prime {cert.prime}: nu(modulus)={cert.nu_modulus} "
            f"> nu(d)={cert.nu_d} + slack {cert.two_adic_slack}"
        )
    oracle_checked = False
    if args.oracle:
        if period.oracle_midy(args.n, args.base, args.d) != verdict.member:
            raise MidyError(
                f"digit oracle disagrees with the fast test on ({args.n}, {args.base}, {args.d})"
            )
        oracle_checked = True
        lines.append("oracle check: ok")
    inputs = {"base": args.base, "n": args.n, "d": args.d, "oracle": args.oracle}
    return inputs, result, lines, oracle_checked


def _cmd_shrink(args):
    result_obj = constructor.shrink(args.n, args.base, oracle_bound=args.oracle_bound)
    oracle_checked = result_obj.shrunk_modulus <= args.oracle_bound
    result = {
        "z": result_obj.z,
        "shrunk_modulus": result_obj.shrunk_modulus,
        "final_members": list(result_obj.final_set.members),
        "order": result_obj.final_set.order,
        "steps": [
            {"q": s.q, "branch": s.branch, "p": s.p, "c": s.c, "s": s.s, "m": s.m, "z": s.z}
            for s in result_obj.steps
        ],
    }
    lines = [
        f"z = {result_obj.z}",
        f"shrunk modulus {result_obj.shrunk_modulus}, "
        f"midy set {_format_set(result_obj.final_set.members)}",
    ]
    for s in result_obj.steps:
        aux = f", p={s.p}" if s.p is not None else ""
        lines.append(f"  q={s.q}: branch {s.branch}{aux}, z_i={s.z}")
    if args.minimal:
        smallest = constructor.minimal_shrink_multiplier(args.n, args.base, cap=args.minimal_cap)
        result["minimal_z"] = smallest
        lines.append(f"minimal z (brute force up to the constructed one): {smallest}")
    inputs = {"base": args.base, "n": args.n, "minimal": args.minimal}
    return inputs, result, lines, oracle_checked


def _cmd_vanish(args):
    threshold = constructor.vanish_threshold(args.n, args.base, args.p)
    inputs = {"base": args.base, "n": args.n, "p": args.p}
    return inputs, threshold, [str(threshold)], False


def _cmd_zsig(args):
    p = constructor.primitive_prime(
        args.base, args.n, limit=args.limit, method=args.method
    )
    result = {"exceptional": p is None, "prime": p}
    lines = ["exceptional pair" if p is None else str(p)]
    inputs = {"base": args.base, "n": args.n}
    return inputs, result, lines, False


def _cmd_verify(args):
    suite = verify.SUITES[args.suite]
    kwargs = {}
    if args.suite in ("oracle-equivalence", "mode-equivalence"):
        kwargs = {"base": args.base, "max_n": args.max_n, "fast": args.fast_oracle}
    elif args.suite == "coset":
        kwargs = {"base": args.base, "max_n": args.max_n}
    elif args.suite in ("prime-power", "order-lift"):
        # --max-n doubles as the exponent bound here
        max_exp = args.max_n if args.max_n is not None else args.max_exp
        kwargs = {"base": args.base, "max_p": args.max_p, "max_exp": max_exp}
    elif args.suite == "product":
        kwargs = {"base": args.base, "max_product": args.max_product}
    elif args.suite in ("upward-closure", "even-multiplier", "gcd-form"):
        kwargs = {"base": args.base, "max_n": args.max_n}
    elif args.suite == "zsig":
        kwargs = {"max_base": args.max_base, "max_order": args.max_order}
    report = suite(**kwargs)
    payload = report.to_payload()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    lines = [report.summary()]
    inputs = {"suite": args.suite, **report.params}
    oracle_checked = args.suite in ("oracle-equivalence", "mode-equivalence")
    return inputs, payload, lines, oracle_checked


# ---------------------------------------------------------------------------
# parser

def _add_common(sub):
    sub.add_argument("--json", action="store_true", help="emit one JSON document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midy",
        description="Block-sum divisibility (Midy) sets of repeating base-b expansions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("order", help="multiplicative order of the base modulo n")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_order)

    p = subs.add_parser("period", help="periodic digits of x/n, optionally in blocks")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)
    p.add_argument("--x", type=int, default=1, help="numerator (default 1)")
    p.add_argument("--blocks", type=int, default=None, metavar="D",
                   help="also split the period into D blocks and sum them")
    _add_common(p)
    p.set_defaults(handler=_cmd_period)

    p = subs.add_parser("set", help="the full Midy set of n to the base")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check every divisor against the digit oracle")
    p.add_argument("--fast-oracle", action="store_true",
                   help="oracle skips to one numerator per orbit of the base")
    p.add_argument("--multipliers", action="store_true",
                   help="also print the block-sum multiplier of every member")
    _add_common(p)
    p.set_defaults(handler=_cmd_set)

    p = subs.add_parser("check", help="membership of one block count d, with certificate")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the digit oracle")
    _add_common(p)
    p.set_defaults(handler=_cmd_check)

    p = subs.add_parser("shrink", help="multiplier z collapsing the Midy set of z*n")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)
    p.add_argument("--oracle-bound", type=int, default=1_000_000,
                   help="re-check with the digit oracle while z*n stays below this")
    p.add_argument("--minimal", action="store_true",
                   help="also brute-force the smallest z below the constructed one")
    p.add_argument("--minimal-cap", type=int, default=200_000,
                   help="refuse the brute-force sweep beyond this constructed z")
    _add_common(p)
    p.set_defaults(handler=_cmd_shrink)

    p = subs.add_parser("vanish", help="largest t with a nonempty set for p**t * n")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_vanish)

    p = subs.add_parser("zsig", help="smallest prime whose order of the base is n")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=10_000_000)
    p.add_argument("--method", choices=("auto", "scan", "cyclotomic"), default="auto")
    _add_common(p)
    p.set_defaults(handler=_cmd_zsig)

    p = subs.add_parser("verify", help="run a property sweep and report pass/fail")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--max-n", type=int, default=None,
                   help="modulus bound (suite-dependent default)")
    p.add_argument("--max-p", type=int, default=50)
    p.add_argument("--max-exp", type=int, default=4)
    p.add_argument("--max-product", type=int, default=2000)
    p.add_argument("--max-base", type=int, default=20)
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--fast-oracle", action="store_true")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="also write the full JSON report to PATH")
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


_MAX_N_DEFAULTS = {
    "oracle-equivalence": 1000,
    "mode-equivalence": 1000,
    "coset": 300,
    "upward-closure": 500,
    "even-multiplier": 500,
    "gcd-form": 500,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max_n is None:
        args.max_n = _MAX_N_DEFAULTS.get(args.suite)
    t0 = perf_counter()
    try:
        inputs, result, lines, oracle_checked = args.handler(args)
    except MidyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = (perf_counter() - t0) * 1000.0
    if args.json:
        doc = {
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "oracle_checked": oracle_checked,
            "elapsed_ms": round(elapsed_ms, 3),
        }
        print(json.dumps(doc))
    else:
        for line in lines:
            print(line)
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
