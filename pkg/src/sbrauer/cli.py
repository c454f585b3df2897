"""Command-line front end.

Every subcommand is deterministic: identical inputs produce identical
output.  Exit codes: 0 success, 1 a verification check found a
counterexample, 2 usage or parse errors.  Elements are passed in window
notation on the command line; diagrams arrive on stdin in the one-line
``n=...; u-v:s; ...`` form.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import arith, diagram, groups, hyperoct, perm


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbrauer",
        description="signed Brauer diagrams and signed permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", help="multiply two elements in window notation")
    p.add_argument("left")
    p.add_argument("right")
    _format_flag(p)

    p = sub.add_parser("embed", help="embed an element into the doubled symmetric group")
    p.add_argument("element")
    _format_flag(p)

    p = sub.add_parser("decompose", help="canonicalize cycles, or invert an embedding")
    p.add_argument("cycles")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--invert", action="store_true",
                   help="recover window notation from an embedded permutation")
    _format_flag(p)

    p = sub.add_parser("enumerate", help="list elements, one window per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--even", action="store_true")
    p.add_argument("--cap", type=int, default=groups.EXHAUSTIVE_CAP)
    _format_flag(p)

    p = sub.add_parser("verify", help="check registered structural claims")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--claim", choices=list(groups.CLAIMS))
    group.add_argument("--all", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", choices=["enumeration", "bsgs"], default="enumeration")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=groups.EXHAUSTIVE_CAP)
    p.add_argument("--seed", type=int, default=groups.DEFAULT_SEED)
    _format_flag(p)

    p = sub.add_parser("valuation", help="check the 2-adic valuation results")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--exact-limit", type=int, default=arith.EXACT_LIMIT)
    _format_flag(p)

    p = sub.add_parser("render", help="render a diagram read from stdin")
    p.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
    return parser


def _format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text")


def _json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cmd_mul(args, stdin_text):
    product = hyperoct.mul(
        hyperoct.parse_signed(args.left), hyperoct.parse_signed(args.right)
    )
    window = hyperoct.format_signed(product)
    cycles = perm.format_cycles(hyperoct.embed(product))
    if args.format == "json":
        return 0, _json({"window": window, "cycles": cycles})
    return 0, f"{window}\n{cycles}\n"


def _cmd_embed(args, stdin_text):
    cycles = perm.format_cycles(hyperoct.embed(hyperoct.parse_signed(args.element)))
    if args.format == "json":
        return 0, _json({"cycles": cycles})
    return 0, cycles + "\n"


def _cmd_decompose(args, stdin_text):
    p = perm.parse_cycles(args.cycles, args.degree)
    if args.invert:
        result = hyperoct.format_signed(hyperoct.invert_embedding(p))
        key = "window"
    else:
        result = perm.format_cycles(p)
        key = "cycles"
    if args.format == "json":
        return 0, _json({key: result})
    return 0, result + "\n"


def _cmd_enumerate(args, stdin_text):
    stream = (
        groups.enumerate_even(args.n, cap=args.cap)
        if args.even
        else groups.enumerate_signed(args.n, cap=args.cap)
    )
    windows = [hyperoct.format_signed(s) for s in stream]
    if args.format == "json":
        return 0, _json({"n": args.n, "even": args.even, "elements": windows})
    return 0, "".join(line + "\n" for line in windows)


def _report_payload(r):
    return {
        "claim": r.claim,
        "n": r.n,
        "checked": r.checked,
        "failures": len(r.counterexamples),
        "counterexamples": list(r.counterexamples),
        "mode": r.mode,
        "duration": r.duration,
    }


def _cmd_verify(args, stdin_text):
    if args.all:
        reports = groups.verify_all(
            args.n, cap=args.cap, jobs=args.jobs, oracle=args.oracle, seed=args.seed
        )
    else:
        reports = [
            groups.verify(
                args.claim, args.n, cap=args.cap, jobs=args.jobs,
                oracle=args.oracle, seed=args.seed,
            )
        ]
    code = 0 if all(r.ok for r in reports) else 1
    if args.format == "json":
        return code, _json({"reports": [_report_payload(r) for r in reports]})
    lines = [line for r in reports for line in r.lines()]
    return code, "".join(line + "\n" for line in lines)


def _cmd_valuation(args, stdin_text):
    reports = [
        arith.verify_corollary(args.limit, args.exact_limit),
        arith.verify_divisibility(args.limit, args.exact_limit),
    ]
    code = 0 if all(r.ok for r in reports) else 1
    if args.format == "json":
        return code, _json({"reports": [_report_payload(r) for r in reports]})
    lines = [line for r in reports for line in r.lines()]
    return code, "".join(line + "\n" for line in lines)


def _cmd_render(args, stdin_text):
    text = stdin_text if stdin_text is not None else sys.stdin.read()
    d = diagram.parse_diagram(text)
    if args.format == "json":
        payload = {
            "n": d.n,
            "edges": [f"{u}-{v}:{s}" for u, v, s in d.edges],
            "ascii": diagram.render(d, "ascii"),
            "dot": diagram.render(d, "dot"),
        }
        return 0, _json(payload)
    return 0, diagram.render(d, args.format)


_HANDLERS = {
    "mul": _cmd_mul,
    "embed": _cmd_embed,
    "decompose": _cmd_decompose,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "valuation": _cmd_valuation,
    "render": _cmd_render,
}


def run(argv, stdin_text: str | None = None) -> tuple[int, str]:
    """Run one command; returns (exit code, combined output text)."""
    captured = io.StringIO()
    parser = build_parser()
    try:
        with redirect_stdout(captured), redirect_stderr(captured):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), captured.getvalue()
    try:
        code, text = _HANDLERS[args.command](args, stdin_text)
    except ValueError as exc:
        return 2, captured.getvalue() + f"error: {exc}\n"
    return code, captured.getvalue() + text


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
