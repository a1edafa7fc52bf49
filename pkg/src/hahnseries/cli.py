"""Command line interface: ``hahnseries {eval,check,find-relation,selftest}``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage or
syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import HahnError, ResourceError, UsageError
from .frontend.evaluate import DEFAULT_DEPTH, EvalContext, evaluate, parse_spec
from .frontend.parser import ParseError, parse
from .oracle import DEFAULT_CAP, find_relation
from .schanuel import check_corollary


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="derivation, e.g. case1:shift=1 or el:shift=1")
    common.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="terms kept in exp/log/inv (default %(default)s)")

    parser = argparse.ArgumentParser(prog="hahnseries", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one expression")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", parents=[common], help="emit a transcendence certificate")
    p.add_argument("files", nargs="*", help="files with one expression per line, '#' comments")
    p.add_argument("-e", "--expr", action="append", default=[])

    p = sub.add_parser("find-relation", parents=[common], help="search for a polynomial relation")
    p.add_argument("files", nargs="*")
    p.add_argument("-e", "--expr", action="append", default=[])
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("selftest", help="run the seeded invariant suites")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read_expressions(args) -> list[tuple[str, str]]:
    """``(label, text)`` pairs from -e options followed by files."""
    out = [(f"-e #{i + 1}", text) for i, text in enumerate(args.expr)]
    for path in args.files:
        try:
            with open(path, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as err:
            raise UsageError(f"cannot read {path}: {err.strerror}") from None
        for n, line in enumerate(lines, start=1):
            text = line.split("#", 1)[0].strip()
            if text:
                out.append((f"{path}:{n}", text))
    if not out:
        raise UsageError("no expressions given (use -e or FILE)")
    return out


def _evaluate_all(args) -> list:
    ctx = _context(args)
    values = []
    for label, text in _read_expressions(args):
        try:
            values.append(evaluate(parse(text), ctx))
        except HahnError as err:
            err.label = label
            raise
    return values


def _context(args) -> EvalContext:
    spec = parse_spec(args.spec) if args.spec else None
    if args.depth < 0:
        raise UsageError("--depth must be non-negative")
    return EvalContext(spec, args.depth)


def _run(args, out) -> int:
    if args.command == "selftest":
        from .selftest import run_all

        return 0 if run_all(args.seed, out=lambda line: print(line, file=out)) else 1
    if args.command == "eval":
        value = evaluate(parse(args.expr), _context(args))
        if args.json:
            payload = {
                "expression": args.expr,
                "series": value.render(),
                "guarantee": None if value.guarantee is None else value.guarantee.render(),
                "terms": [[g.render(), str(c)] for g, c in value.terms],
            }
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            out.write(value.render() + "\n")
        return 0
    if args.command == "check":
        out.write(check_corollary(_evaluate_all(args)).to_json())
        return 0
    if args.degree < 1:
        raise UsageError("--degree must be at least 1")
    out.write(find_relation(_evaluate_all(args), args.degree, args.cap).to_json())
    return 0


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (ParseError, UsageError) as exc:
        prefix = getattr(exc, "label", None)
        print(f"error: {prefix + ': ' if prefix else ''}{exc}", file=err)
        return 2
    except (HahnError, ResourceError) as exc:
        where = ""
        if getattr(exc, "label", None):
            where += exc.label + ": "
        if exc.position:
            where += f"{exc.position[0]}:{exc.position[1]}: "
        print(f"error: {where}{exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
