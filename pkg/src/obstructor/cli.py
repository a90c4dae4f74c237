"""Command-line front end: ``obstructor {analyze,sweep,exotic,oracle}``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import report
from .cech import WINDOW_ENV, WindowError
from .report import EXIT_INPUT_ERROR, SpecError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(values: list[str]) -> list[int]:
    out = []
    for chunk in values:
        for piece in chunk.split(","):
            piece = piece.strip()
            if not piece:
                continue
            try:
                out.append(int(piece))
            except ValueError:
                raise SpecError("degrees", f"not an integer: {piece!r}") from None
    return out


def _range(text: str) -> tuple[int, int]:
    # "lo:hi" or "lo..hi", bounds inclusive
    for sep in ("..", ":"):
        if sep in text[1:]:
            i = text.index(sep, 1)
            try:
                return int(text[:i]), int(text[i + len(sep):])
            except ValueError:
                break
    raise SpecError("box", f"expected LO:HI, got {text!r}")


def _model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("spec_file", nargs="?", help="JSON model spec ('-' for stdin)")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--degrees", nargs="+", metavar="D", help="summand degrees, space or comma separated")
    p.add_argument("--flags", nargs="+", metavar="F", help="triviality markers (Trivial/NonTrivial/Unknown)")
    p.add_argument("--balanced", nargs=2, type=int, metavar=("Q", "D"), help="rank-Q bundle O(D)^Q")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="obstructor", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--window", type=int, help=f"Laurent window (default ${WINDOW_ENV} or 64)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="obstruction table and verdict for one model")
    _model_args(p)

    p = sub.add_parser("sweep", help="classify every model in a box of degrees")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--box", nargs="+", action="extend", metavar="LO:HI", help="one inclusive range per summand")
    p.add_argument("--rank", type=int, help="repeat a single --box range this many times")
    p.add_argument("--balanced", action="store_true", help="visit only equal-degree tuples")
    p.add_argument("--check-alpha", action="store_true", help="cross-check with the boundary map")

    p = sub.add_parser("exotic", help="boundary map on H0(Q^(2)) for a rank-3 model on P1")
    _model_args(p)

    p = sub.add_parser("oracle", help="Cech dimensions and bases for O(d) on P1")
    p.add_argument("d", type=int)

    for name, sp in sub.choices.items():
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--window", type=int, default=argparse.SUPPRESS)
    return parser


def _spec_from_args(args) -> report.ModelSpec:
    sources = [args.spec_file is not None, args.degrees is not None, args.balanced is not None]
    if sum(sources) != 1:
        raise SpecError("input", "give exactly one of a spec file, --degrees or --balanced")
    if args.spec_file is not None:
        text = sys.stdin.read() if args.spec_file == "-" else Path(args.spec_file).read_text()
        return report.parse_spec(text)
    if args.balanced is not None:
        q, d = args.balanced
        return report.balanced_spec(q, d, args.genus)
    flags = None
    if args.flags:
        flags = tuple(f for chunk in args.flags for f in chunk.split(",") if f)
    return report.ModelSpec(args.genus, tuple(_int_list(args.degrees)), flags)


def _emit(doc, as_json: bool, text_renderer) -> None:
    sys.stdout.write(report.to_json(doc) if as_json else text_renderer(doc))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get(WINDOW_ENV)
    if args.window is not None:
        # the Cech layer reads its window from the environment
        os.environ[WINDOW_ENV] = str(args.window)
    try:
        return _run(args)
    finally:
        if saved is None:
            os.environ.pop(WINDOW_ENV, None)
        else:
            os.environ[WINDOW_ENV] = saved


def _run(args) -> int:
    try:
        if args.command == "analyze":
            doc = report.analyze(_spec_from_args(args))
            _emit(doc, args.json, report.render_text)
            return report.exit_code(doc)
        if args.command == "exotic":
            spec = _spec_from_args(args)
            if spec.genus != 0:
                raise SpecError("genus", "the exotic construction runs on P1 only")
            doc = report.exotic_report(spec.degrees)
            _emit(doc, args.json, report.render_exotic_text)
            return 10 if doc["alpha_rank"] else 0
        if args.command == "sweep":
            if not args.box:
                raise SpecError("box", "a bounded box is required (--box LO:HI ...)")
            ranges = [_range(b) for b in args.box]
            if args.rank is not None:
                if len(ranges) != 1:
                    raise SpecError("rank", "--rank needs exactly one --box range")
                ranges = ranges * args.rank
            table = report.sweep(ranges, args.genus, args.balanced, args.check_alpha)
            _emit(table, args.json, report.render_sweep_text)
            return 0
        doc = report.oracle(args.d)
        _emit(doc, args.json, report.render_oracle_text)
        return 0
    except (SpecError, WindowError, ValueError, OSError) as exc:
        print(f"obstructor: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
