"""Command-line interface.

Exit codes: 0 success; 1 verification failure or bad ``--a`` range;
2 pole or exceptional point at the requested specialization; 3 symbolic
depth exceeded; 64 malformed input (CSV, JSON, flags, unreadable file).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import families
from .curve import SYMBOLIC_CAP, Point, non_torsion_certificate
from .curve.weierstrass import format_value
from .errors import (
    ExceptionalPoint,
    MalformedRow,
    ParseError,
    PoleAtPoint,
    SingularCurve,
    SymbolicDepthExceeded,
    XyzFamError,
)
from .exact import format_rational, parse_rational
from .search import read_table, search_many, shipped_table, verify_table, write_rows

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_POLE = 2
EXIT_DEPTH = 3
EXIT_USAGE = 64

SCHEME_CHOICES = ("euler", "elkies", "fourvar", "euler3", "elkies3", "appendix")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_bindings(text: str) -> dict:
    """``"a=1,s=1/2"`` -> ``{"a": Fraction(1), "s": Fraction(1, 2)}``."""
    out = {}
    for part in text.split(","):
        if not part.strip():
            continue
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in ("a", "s", "t"):
            raise ParseError(f"bad binding {part!r}; expected k=v with k in a, s, t")
        out[key] = parse_rational(value)
    return out


def parse_a_range(text: str) -> list:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    return list(range(lo, hi + 1))


def _emit(obj, fmt, out):
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        for k, v in obj.items():
            out.write(f"{k}: {v}\n")


def cmd_family(args, out) -> int:
    scheme = families.canonical_scheme(args.scheme)
    at = parse_bindings(args.at) if args.at else None
    if at is None or args.n <= SYMBOLIC_CAP:
        sol = families.family(scheme, args.n)
    if at is None:
        verified = families.verify_solution_identity(sol)
        if args.format == "json":
            out.write(sol.to_json(indent=2) + "\n")
        else:
            for name, comp in zip(sol.names, sol.components):
                out.write(f"{name} = {format_value(comp)}\n")
            out.write(f"verified: {str(verified).lower()}\n")
        return EXIT_OK

    missing = [v for v in families._SCHEME_VARIABLES[scheme] if v not in at]
    if missing:
        raise ParseError(f"--at must bind {', '.join(missing)} for {scheme}")
    if args.n <= SYMBOLIC_CAP:
        values = families.specialize(sol, at)
        names = sol.names
    else:
        num = families.family_at(scheme, args.n, at)
        values, names = num.components, num.names
    prod = Fraction(1)
    for v in values:
        prod *= v
    verified = prod * sum(values) == at["a"]
    if args.format == "json":
        doc = {
            "scheme": scheme,
            "n": args.n,
            "at": {k: format_rational(v) for k, v in sorted(at.items())},
            "components": [format_rational(v) for v in values],
            "verified": verified,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for name, v in zip(names, values):
            out.write(f"{name} = {format_rational(v)}\n")
        out.write(f"verified: {str(verified).lower()}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    try:
        sol = families.SolutionTuple.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        out.write(f"error: cannot read solution: {exc}\n")
        return EXIT_USAGE
    ok = families.verify_solution_identity(sol)
    out.write(f"verified: {str(ok).lower()}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_curve(args, out) -> int:
    fc = families.family_curve(families.canonical_scheme(args.scheme))
    if args.at:
        fc = fc.specialize(parse_bindings(args.at))
    curve = fc.curve
    point = Point.parse(args.point, symbolic=fc.at is None) if args.point else fc.base_point
    op = args.op
    if op == "show":
        doc = {"scheme": fc.scheme, "curve": str(curve), "base_point": str(fc.base_point)}
        if fc.quartic is not None:
            q = fc.quartic
            doc["quartic"] = "; ".join(
                f"{k}={format_value(v)}" for k, v in zip(("q4", "q3", "q2", "q1", "q0"), (q.q4, q.q3, q.q2, q.q1, q.q0))
            )
        _emit(doc, args.format, out)
        return EXIT_OK
    if op == "on-curve":
        ok = curve.contains(point)
        _emit({"point": str(point), "on_curve": str(ok).lower()}, args.format, out)
        return EXIT_OK if ok else EXIT_FAIL
    if op in ("double", "multiple", "quartic-image"):
        n = 2 if op == "double" else args.n
        cap = None if fc.at is not None else SYMBOLIC_CAP
        q = curve.mul(n, point, cap=cap)
        doc = {"n": n, "point": str(q)}
        if op == "quartic-image":
            if fc.maps is None:
                raise ParseError(f"{fc.scheme} has no quartic model")
            doc["quartic_point"] = str(fc.maps.inverse(q))
        _emit(doc, args.format, out)
        return EXIT_OK
    if op == "torsion":
        if fc.at is None:
            raise ParseError("torsion certificates need --at (a curve over Q)")
        cert = non_torsion_certificate(curve, point)
        if args.format == "json":
            out.write(cert.to_json(indent=2) + "\n")
        else:
            out.write(f"verdict: {cert.verdict}\nreason: {cert.reason}\n")
            for w in cert.to_dict()["witness"]:
                out.write(f"{w['n']}P = ({w['X']}, {w['Y']}) integral={w['integral']}\n")
        return EXIT_OK
    raise ParseError(f"unknown op {op!r}")


def cmd_search(args, out) -> int:
    try:
        a_values = parse_a_range(args.a)
    except ValueError:
        sys.stderr.write(f"error: cannot parse --a {args.a!r}; use N or LO..HI\n")
        return EXIT_FAIL
    if args.format == "json":
        rows = [row.to_dict() for _, chunk in search_many(a_values, args.height, args.jobs) for row in chunk]
        out.write(json.dumps(rows, indent=2) + "\n")
        return EXIT_OK
    for _, chunk in search_many(a_values, args.height, args.jobs):
        write_rows(chunk, out)
        out.flush()
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.action == "show":
        write_rows(shipped_table(), out, header=True)
        return EXIT_OK
    try:
        if args.file:
            with open(args.file, newline="") as fh:
                rows = read_table(fh)
        else:
            rows = list(enumerate(shipped_table(), start=2))
    except MalformedRow as exc:
        out.write(f"malformed CSV: {exc}\n")
        return EXIT_USAGE
    report = verify_table(rows)
    for line in report.lines():
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xyzfam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("family", help="generate a parametric solution from nP")
    p.add_argument("scheme", choices=SCHEME_CHOICES)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--at", help="numeric bindings, e.g. a=1,s=1,t=1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check prod*sum = a for a solution JSON document")
    p.add_argument("--file", required=True, help="path, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", help="curve diagnostics")
    p.add_argument("scheme", choices=SCHEME_CHOICES)
    p.add_argument("--op", choices=("show", "on-curve", "double", "multiple", "quartic-image", "torsion"), default="show")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--at")
    p.add_argument("--point", help="'(X, Y)'; defaults to the scheme's base point")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("search", help="brute-force small positive solutions")
    p.add_argument("--a", required=True, help="N or LO..HI")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="show or verify the table of small solutions")
    p.add_argument("action", nargs="?", choices=("verify", "show"), default="verify")
    p.add_argument("--file")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except PoleAtPoint as exc:
        sys.stderr.write(f"pole: {exc}\n")
        return EXIT_POLE
    except (ExceptionalPoint, SingularCurve) as exc:
        sys.stderr.write(f"degenerate: {exc}\n")
        return EXIT_POLE
    except SymbolicDepthExceeded as exc:
        sys.stderr.write(f"{exc}; pass --at to compute over Q instead\n")
        return EXIT_DEPTH
    except (ParseError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except XyzFamError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
