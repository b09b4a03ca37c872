"""``sid`` command-line interface.

Exit codes: 0 success, 1 solver error or flagged negative atoms, 2 bad input.
``SID_TOLERANCE`` overrides the 1e-9 identity tolerance for exploratory runs.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import blocks, cases, shannon
from .errors import InputError, ParseError, SIDError
from .formats import canonical_json, fmt_float, parse_table, samples_to_csv, table_to_json
from .report import METHODS, atoms_json, decompose, render_text, report_exit_code, solve
from .table import TOL, JointTable, group
from .venn import render_svg

EXIT_OK, EXIT_SOLVER, EXIT_INPUT = 0, 1, 2


def tolerance() -> float:
    raw = os.environ.get("SID_TOLERANCE")
    if not raw:
        return TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ParseError(f"SID_TOLERANCE={raw!r} is not a number") from None
    if tol <= 0:
        raise ParseError("SID_TOLERANCE must be positive")
    return tol


def parse_group(spec: str) -> dict:
    """``"X1=a,b,c,d;X2=a,b,e,f"`` -> ``{"X1": ["a","b","c","d"], ...}``."""
    out = {}
    for chunk in filter(None, (c.strip() for c in spec.split(";"))):
        name, sep, members = chunk.partition("=")
        if not sep or not name.strip():
            raise ParseError(f"bad --group block {chunk!r}; expected NAME=v1,v2")
        out[name.strip()] = [m.strip() for m in members.split(",") if m.strip()]
    if not out:
        raise ParseError("empty --group spec")
    return out


def load_table(args) -> JointTable:
    if getattr(args, "case", None) is not None:
        table = cases.generate_case(args.case)
    elif getattr(args, "fixture", None):
        table = cases.fixture(args.fixture)
    else:
        path = getattr(args, "input", None)
        if path in (None, "-"):
            if path is None and sys.stdin.isatty():
                raise ParseError("no input: give --input PATH, --case N, --fixture NAME or pipe data on stdin")
            text = sys.stdin.read()
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ParseError(f"cannot read {path}: {exc.strerror}") from None
        table = parse_table(text)
    if getattr(args, "group", None):
        table = group(table, parse_group(args.group), allow_overlap=True)
    return table


def emit(text: str, out: str | None = None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def split_set(token: str) -> list[str]:
    return [t for t in token.split(",") if t]


# --- subcommands ------------------------------------------------------------

def cmd_decompose(args) -> int:
    table = load_table(args)
    report = decompose(table, args.method, tolerance())
    emit(canonical_json(report) + "\n" if args.format == "json" else render_text(report), args.out)
    return report_exit_code(report)


def cmd_shannon(args) -> int:
    table = load_table(args)
    results = []
    if args.entropy:
        results.append((f"H({','.join(args.entropy)})", shannon.entropy(table, args.entropy)))
    for of, given in args.cond or ():
        results.append((f"H({of}|{given})", shannon.conditional_entropy(table, split_set(of), split_set(given))))
    for a, b in args.mi or ():
        results.append((f"I({a};{b})", shannon.mutual_information(table, split_set(a), split_set(b))))
    for a, b, c in args.cmi or ():
        results.append((f"I({a};{b}|{c})", shannon.conditional_mutual_information(
            table, split_set(a), split_set(b), split_set(c))))
    if args.tc:
        results.append((f"TC({','.join(args.tc)})", shannon.total_correlation(table, args.tc)))
    if args.coi:
        results.append((f"CoI({','.join(args.coi)})", shannon.co_information(table, *args.coi)))
    for v in args.ext or ():
        results.append((f"Ext({v})", shannon.external_information(table, v)))
    if not results:
        raise ParseError("no measure requested; see sid shannon --help")
    if args.format == "json":
        emit(canonical_json(dict(results)) + "\n", args.out)
    else:
        emit("".join(f"{k} = {fmt_float(v)}\n" for k, v in results), args.out)
    return EXIT_OK


def render_blocks(table: JointTable, reports) -> str:
    lines = []
    for rep in reports:
        name, value = rep.anchor
        lines.append(f"anchor {name}={value}")
        lines.append("  " + "  ".join(f"{n:>8}" for n in table.names) + f"  {'p':>10}  tag")
        for o, p, tag in rep.rows(table):
            lines.append("  " + "  ".join(f"{str(v):>8}" for v in o) + f"  {fmt_float(p):>10}  {tag}")
        lines.append("")
    return "\n".join(lines)


def block_reports(table: JointTable, anchor: str, value):
    if value is not None:
        return [blocks.classify_blocks(table, (anchor, value))]
    values = sorted({o[table.index(anchor)] for o in table.pmf}, key=str)
    return [blocks.classify_blocks(table, (anchor, v)) for v in values]


def cmd_blocks(args) -> int:
    table = load_table(args)
    anchor = args.anchor or table.names[0]
    reports = block_reports(table, anchor, args.value)
    if args.format == "json":
        emit(canonical_json([r.to_json(table) for r in reports]) + "\n", args.out)
    else:
        emit(render_blocks(table, reports), args.out)
    return EXIT_OK


def cmd_venn(args) -> int:
    table = load_table(args)
    tol = tolerance()
    report = atoms_json(table, solve(table, args.method, tol), tol)
    try:
        emit(render_svg(report), args.out)
    except OSError as exc:
        raise ParseError(f"cannot write {args.out}: {exc.strerror}") from None
    return report_exit_code(report)


def cmd_cases(args) -> int:
    if args.case is None and not args.fixture:
        raise ParseError("give --case N or --fixture NAME")
    table = load_table(args)
    if args.emit == "dist":
        emit(json.dumps(table_to_json(table), indent=2) + "\n", args.out)
    elif args.emit == "samples":
        rows = [o for o, _ in sorted(table.pmf.items())]
        emit(samples_to_csv(table.names, rows), args.out)
    else:
        anchor = args.anchor or table.names[0]
        value = args.value
        if value is None:
            value = min((o[table.index(anchor)] for o in table.pmf), key=str)
        emit(render_blocks(table, block_reports(table, anchor, value)), args.out)
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def _inputs(p: argparse.ArgumentParser, group_opt: bool = True):
    p.add_argument("--input", metavar="PATH", help="JSON distribution or CSV samples ('-' for stdin)")
    p.add_argument("--case", type=int, metavar="N", help="built-in case system 1..4")
    p.add_argument("--fixture", choices=sorted(cases.FIXTURES), help="built-in small fixture")
    if group_opt:
        p.add_argument("--group", metavar="SPEC", help='composite variables, e.g. "X1=a,b,c,d;X2=a,b,e,f;X3=c,d,e,f"')
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sid", description="Information decomposition of three-variable systems.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="compute redundant/unique/synergistic/external atoms")
    _inputs(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("shannon", help="classical measures; variable sets are comma-separated")
    _inputs(p)
    p.add_argument("--entropy", nargs="+", metavar="VAR", help="joint entropy of VARs")
    p.add_argument("--cond", nargs=2, action="append", metavar=("OF", "GIVEN"), help="H(OF|GIVEN)")
    p.add_argument("--mi", nargs=2, action="append", metavar=("A", "B"), help="I(A;B)")
    p.add_argument("--cmi", nargs=3, action="append", metavar=("A", "B", "GIVEN"), help="I(A;B|GIVEN)")
    p.add_argument("--tc", nargs="+", metavar="VAR", help="total correlation")
    p.add_argument("--coi", nargs=3, metavar="VAR", help="co-information of three variables")
    p.add_argument("--ext", action="append", metavar="VAR", help="external information of VAR")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_shannon)

    p = sub.add_parser("blocks", help="tag support rows as yellow / syn / unique:<var> / plain")
    _inputs(p)
    p.add_argument("--anchor", metavar="VAR", help="anchor variable (default: first)")
    p.add_argument("--value", help="anchor value (default: every value)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("venn", help="write an SVG Venn diagram of the atoms")
    _inputs(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=cmd_venn)

    p = sub.add_parser("cases", help="emit a built-in case system")
    _inputs(p, group_opt=False)
    p.add_argument("--emit", choices=("dist", "samples", "table"), default="dist")
    p.add_argument("--anchor", metavar="VAR")
    p.add_argument("--value")
    p.set_defaults(func=cmd_cases)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"sid: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SIDError as exc:
        print(f"sid: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"sid: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
