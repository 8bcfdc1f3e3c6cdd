"""Command-line front end.

    cobweb charpoly --seq odd --n 3 --method closed
    cobweb whitney --seq const:3 --n 2 --format csv
    cobweb hasse --seq fib --n 2 > p2.dot
    cobweb verify --seq nat --n 6 --format json

Exit codes: 0 ok, 1 verification failure, 2 usage or domain error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import golden
from .charpoly import charpoly_by_method, charpoly_closed, charpoly_recurrence, verify, whitney_closed
from .errors import CobwebError, ResourceError
from .oracle import DEFAULT_MAX_INTERVAL, charpoly_bruteforce
from .poset import DEFAULT_MAX_VERTICES, build, export_dot
from .sequence import SequenceSpec, parse_spec, values

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

FORMATS = {
    "charpoly": ("text", "json"),
    "whitney": ("text", "json", "csv"),
    "hasse": ("dot",),
    "verify": ("text", "json"),
}


class UsageError(CobwebError):
    pass


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seq", required=True, help="fib | nat | odd | even | const:<k> | list:<c0,c1,...>")
    common.add_argument("--n", required=True, type=_non_negative, help="top level index of P_n")
    common.add_argument("--format", default=None, help="text | json | csv | dot (depends on command)")
    common.add_argument(
        "--max-interval",
        type=_positive,
        default=DEFAULT_MAX_INTERVAL,
        help=f"brute-force interval size cap (default {DEFAULT_MAX_INTERVAL})",
    )

    parser = argparse.ArgumentParser(prog="cobweb", description="Characteristic polynomials of finite cobweb posets.")
    parser.add_argument("--paper-examples", action="store_true", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", metavar="{charpoly,whitney,hasse,verify}")

    p = sub.add_parser("charpoly", parents=[common], help="print chi_n(t)")
    p.add_argument("--method", choices=("closed", "recurrence", "brute"), default="closed")
    sub.add_parser("whitney", parents=[common], help="Whitney numbers of both kinds")
    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram as Graphviz DOT")
    p.add_argument(
        "--max-vertices",
        type=_positive,
        default=DEFAULT_MAX_VERTICES,
        help=f"refuse posets with more vertices (default {DEFAULT_MAX_VERTICES})",
    )
    sub.add_parser("verify", parents=[common], help="cross-check closed form, recurrence and brute force")
    return parser


def _format(args) -> str:
    allowed = FORMATS[args.command]
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} is not available for {args.command}; choose from {', '.join(allowed)}")
    return fmt


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_charpoly(spec: SequenceSpec, n: int, method: str, fmt: str, max_interval: int) -> str:
    chi = charpoly_by_method(spec, n, method, max_interval)
    if fmt == "json":
        return _dumps(
            {"seq": spec.name, "n": n, "method": method, "coefficients": [str(c) for c in chi.coefficients]}
        )
    return chi.to_text() + "\n"


def cmd_whitney(spec: SequenceSpec, n: int, fmt: str) -> str:
    W = values(spec, n)
    w = whitney_closed(spec, n).w_closed
    rows = [(k, W[k], w[k]) for k in range(n + 1)]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "W_k", "w_k"])
        writer.writerows([str(c) for c in row] for row in rows)
        return buf.getvalue()
    if fmt == "json":
        return _dumps(
            {"seq": spec.name, "n": n, "rows": [{"k": k, "W_k": str(a), "w_k": str(b)} for k, a, b in rows]}
        )
    widths = [max(len(h), *(len(str(r[i])) for r in rows)) for i, h in enumerate(("k", "W_k", "w_k"))]
    lines = ["  ".join(h.rjust(wd) for h, wd in zip(("k", "W_k", "w_k"), widths))]
    lines += ["  ".join(str(c).rjust(wd) for c, wd in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_hasse(spec: SequenceSpec, n: int, max_vertices: int) -> str:
    return export_dot(build(spec, n), max_vertices)


def render_report(report) -> str:
    out = [f"verify {report.spec_name} n={report.n}: {report.status.upper()}"]
    for e in report.entries:
        brute = "skipped" if e.bruteforce is None else ("ok" if e.bruteforce == e.closed else "MISMATCH")
        rec = "ok" if e.recurrence == e.closed else "MISMATCH"
        out.append(f"  n={e.n}: {e.closed.to_text()}  [recurrence {rec}, brute {brute}]")
    for c in report.printed:
        mark = "match" if c.match else "MISMATCH"
        out.append(f"  printed {c.example} chi_{c.n}: {c.printed.to_text()}  [{mark}]")
    for note in report.notes:
        out.append(f"note: {note}")
    return "\n".join(out) + "\n"


def cmd_verify(spec: SequenceSpec, n: int, fmt: str, max_interval: int):
    report = verify(spec, n, max_interval)
    text = _dumps(report.to_dict()) if fmt == "json" else render_report(report)
    return text, (EXIT_OK if report.passed else EXIT_FAIL)


def run_printed_examples(out) -> int:
    """Compare every printed example against all three methods."""
    ok = True

    def check(label, spec, printed, n, expect_match=True):
        nonlocal ok
        results = {
            "closed": charpoly_closed(spec, n),
            "recurrence": charpoly_recurrence(spec, n),
            "brute": charpoly_bruteforce(build(spec, n)),
        }
        marks = ", ".join(f"{m} {'match' if p == printed else 'MISMATCH'}" for m, p in results.items())
        out.write(f"{label} [{spec.name}] chi_{n} = {printed.to_text()}: {marks}\n")
        if expect_match and any(p != printed for p in results.values()):
            ok = False

    for n, s in enumerate(golden.PRINTED_EXAMPLE_1):
        check("example-1", parse_spec("nat"), golden.IntPolynomial.parse(s), n, expect_match=False)
    for n, s in enumerate(golden.PRINTED_EXAMPLE_1):
        check("example-1", parse_spec("even"), golden.IntPolynomial.parse(s), n)
    for n, s in enumerate(golden.PRINTED_EXAMPLE_2):
        check("example-2", parse_spec("odd"), golden.IntPolynomial.parse(s), n)
    for k in (2, 3, 5, 10):
        for n in range(5):
            check("example-3", SequenceSpec.constant(k), golden.example_3_printed(k, n), n)
    out.write(golden.EXAMPLE_1_NOTE + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.paper_examples and args.command is None:
        return run_printed_examples(sys.stdout)
    if args.command is None:
        parser.print_usage(sys.stderr)
        print("cobweb: error: a command is required", file=sys.stderr)
        return EXIT_USAGE
    code = EXIT_OK
    try:
        fmt = _format(args)
        spec = parse_spec(args.seq)
        if args.command == "charpoly":
            text = cmd_charpoly(spec, args.n, args.method, fmt, args.max_interval)
        elif args.command == "whitney":
            text = cmd_whitney(spec, args.n, fmt)
        elif args.command == "hasse":
            text = cmd_hasse(spec, args.n, args.max_vertices)
        else:
            text, code = cmd_verify(spec, args.n, fmt, args.max_interval)
    except ResourceError as exc:
        print(f"cobweb: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CobwebError as exc:
        print(f"cobweb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    if args.paper_examples:
        code = max(code, run_printed_examples(sys.stdout))
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
