"""Command-line front door for every congruence test and scan.

Exit codes: 0 completed with a verdict, 1 domain or usage error, 2 internal
failure.  Data rows go to stdout, diagnostics and progress to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import arith, sequences, theorems


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's default 2
        raise _UsageError(message)


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


_TEST_KINDS = ["wilson", "babbage", "sharp-babbage", "nonprimality", "mestrovic", "even-converse"]
_VERIFY_ARITY = {
    "lucas": ("a b p", 3),
    "kummer": ("a b p", 3),
    "vandermonde": ("m n", 2),
    "lemma1": ("m n", 2),
    "lemma2": ("m", 1),
    "johnson": ("p", 1),
    "counterexample": ("p", 1),
}


def build_parser() -> _Parser:
    parser = _Parser(prog="bincong", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="run a primality / non-primality test")
    p_test.add_argument("kind", choices=_TEST_KINDS)
    p_test.add_argument("m", type=int)
    p_test.add_argument("p", type=int, nargs="?", default=None)

    p_lpf = sub.add_parser("lpf", help="least prime factor via the congruence scan")
    p_lpf.add_argument("m", type=int)

    p_seq = sub.add_parser("seq", help="emit a sequence scan")
    p_seq.add_argument("name", choices=["a290040"])
    p_seq.add_argument("--limit", type=int, required=True)
    p_seq.add_argument("--format", choices=["human", "tsv", "json"], default="human")
    p_seq.add_argument("--checkpoint", default=None)
    p_seq.add_argument("--workers", type=int, default=1)

    p_scan = sub.add_parser("scan", help="scan qualifying divisors for prime powers")
    p_scan.add_argument("name", choices=["prime-power"])
    p_scan.add_argument("--limit", type=int, required=True)

    p_w = sub.add_parser("wolstenholme", help="residues mod p**3 and p**4 for a prime")
    p_w.add_argument("p", type=int)

    p_v = sub.add_parser("verify", help="run a named cross-check and print witnesses")
    p_v.add_argument("kind", choices=sorted(_VERIFY_ARITY))
    p_v.add_argument("values", type=int, nargs="*")

    return parser


def _cmd_test(args) -> int:
    kind, m, p = args.kind, args.m, args.p
    if kind == "mestrovic":
        if p is None:
            raise _UsageError("test mestrovic needs <m> <p>")
        print(f"{m} {p} holds={_bool(theorems.mestrovic_check(m, p))}")
        return 0
    if p is not None:
        raise _UsageError(f"test {kind} takes a single integer")
    if kind == "wilson":
        print(f"{m} prime={_bool(theorems.wilson_test(m))}")
    elif kind == "babbage":
        print(f"{m} prime={_bool(theorems.babbage_primality_test(m))}")
    elif kind == "sharp-babbage":
        print(f"{m} prime={_bool(theorems.sharp_babbage_primality_test(m))}")
    elif kind == "nonprimality":
        print(f"{m} verdict={theorems.babbage_nonprimality_test(m).value}")
    elif kind == "even-converse":
        res = theorems.even_converse_check(m)
        print(f"{m} residue_mod_4={res.residue_mod_4} holds={_bool(res.holds)}")
    return 0


def _cmd_lpf(args) -> int:
    res = theorems.lpf_via_congruence(args.m)
    print(f"ell={res.ell} residue={res.residue}")
    return 0


def _cmd_seq(args) -> int:
    start, emitted = 2, 0
    if args.checkpoint and os.path.exists(args.checkpoint):
        cp = sequences.load_checkpoint(args.checkpoint)
        start, emitted = cp.next_m, cp.records_emitted
    if start > args.limit:
        return 0
    progress = sys.stderr.isatty()
    for resume_m, records in sequences.scan_blocks(args.limit, start=start, workers=args.workers):
        for rec in records:
            sys.stdout.write(sequences.format_record(rec, args.format) + "\n")
        sys.stdout.flush()
        emitted += len(records)
        if args.checkpoint:
            sequences.save_checkpoint(args.checkpoint, sequences.ScanCheckpoint(resume_m, emitted))
        if progress:
            print(f"scanned m < {resume_m}, {emitted} records", file=sys.stderr)
    return 0


def _cmd_scan(args) -> int:
    pairs = sequences.prime_power_scan(args.limit)
    if not pairs:
        print(f"none found below {args.limit}")
    for m, d in pairs:
        print(f"m={m} d={d}")
    return 0


def _cmd_wolstenholme(args) -> int:
    rep = theorems.wolstenholme_report(args.p)
    print(
        f"p={rep.p} mod_p3={rep.residue_mod_p3} mod_p4={rep.residue_mod_p4} "
        f"wolstenholme_prime={_bool(rep.is_wolstenholme_prime)} "
        f"B_{{p-3}} mod p={rep.bernoulli_bp3_mod_p}"
    )
    return 0


def _cmd_verify(args) -> int:
    kind = args.kind
    usage, arity = _VERIFY_ARITY[kind]
    if len(args.values) != arity:
        raise _UsageError(f"verify {kind} needs {arity} integer(s): {usage}")
    vals = args.values
    if kind == "lucas":
        a, b, p = vals
        got = arith.lucas_binomial_mod_p(a, b, p)
        want = arith.binomial_exact(a, b) % p
        print(f"lucas={got} exact={want} agree={_bool(got == want)}")
    elif kind == "kummer":
        a, b, p = vals
        carries = arith.kummer_valuation(a, b, p)
        exact = arith.padic_valuation(arith.binomial_exact(a + b, a), p).exponent
        print(f"carries={carries} valuation={exact} agree={_bool(carries == exact)}")
    elif kind == "vandermonde":
        m, n = vals
        lhs = arith.binomial_exact(m + n, n)
        rhs = sum(
            arith.binomial_exact(m, k) * arith.binomial_exact(n, n - k) for k in range(n + 1)
        )
        print(f"lhs={lhs} rhs={rhs} agree={_bool(lhs == rhs)}")
    elif kind == "lemma1":
        m, n = vals
        formula = theorems.lemma1_valuation(m, n)
        exact = arith.padic_valuation(arith.binomial_exact(m, n), 2).exponent
        print(f"v2_formula={formula} v2_exact={exact} agree={_bool(formula == exact)}")
    elif kind == "lemma2":
        (m,) = vals
        via_carries = theorems.lemma2_parity(m)
        exact_odd = arith.binomial_exact(2 * m - 1, m - 1) % 2 == 1
        print(f"odd={_bool(via_carries)} exact_odd={_bool(exact_odd)} agree={_bool(via_carries == exact_odd)}")
    elif kind == "johnson":
        (p,) = vals
        q = p**4
        lhs = arith.shifted_central_binomial_mod_prime_power(p, 4)
        rhs = arith.binomial_exact(2 * p * p - 1, p * p - 1) % q
        print(f"p={p} lhs_mod_p4={lhs} rhs_mod_p4={rhs} agree={_bool(lhs == rhs)}")
    elif kind == "counterexample":
        (p,) = vals
        if p > 1000 and sys.stderr.isatty():
            print(f"scanning ~{p * p} factors, this can take a minute or two", file=sys.stderr)
        residue = theorems.prime_square_central_residue(p)
        verdict = residue == 1
        print(f"p={p} m={p * p} residue_mod_m2={residue} counterexample={_bool(verdict)}")
    return 0


_DISPATCH = {
    "test": _cmd_test,
    "lpf": _cmd_lpf,
    "seq": _cmd_seq,
    "scan": _cmd_scan,
    "wolstenholme": _cmd_wolstenholme,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str]) -> int:
    """Parse argv and execute one subcommand; returns the process exit code."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # exact binomials print with thousands of digits
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        return _DISPATCH[args.command](args)
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return 0 if not exc.code else 1
    except Exception as exc:  # pragma: no cover - internal failure contract
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
