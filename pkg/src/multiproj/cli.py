"""Command line front end.

Exit codes: 0 success, 2 parse or validation error, 3 resource ceiling,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import report as rpt
from .charts import build_chart
from .errors import (
    ArithmeticOverflowError,
    InternalInconsistencyError,
    IrrelevantSupportError,
    ResourceLimitError,
    SpecError,
    TorsionUnsupportedError,
)
from .grading import RingSpec, kernel_lattice_of, parse_ring_spec
from .projmodel import build_model, separation_verdict
from .relevance import DEFAULT_MAX_VARS, irrelevant_radical_generators, parse_support
from .sections import binomial_relations, veronese_generators, zero_subring_generators

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_INTERNAL = 4

DEFAULT_RELATION_BOUND = 6


class InputError(Exception):
    pass


def load_spec(path: str) -> RingSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_ring_spec(text)


def parse_forms(text: str, s: int) -> list[tuple[int, ...]]:
    """``"1,0;0,1"`` -> two forms on Z^2; an empty string means no forms."""
    forms = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            form = tuple(int(x) for x in chunk.split(","))
        except ValueError:
            raise InputError(f"cannot parse form {chunk!r}") from None
        if len(form) != s:
            raise InputError(f"form {chunk!r} has {len(form)} entries, expected {s}")
        forms.append(form)
    return forms


def _analyze(spec: RingSpec, args) -> dict:
    model = build_model(spec, max_vars=args.max_vars)
    rep = separation_verdict(model)
    irr = irrelevant_radical_generators(spec, args.max_vars)
    return rpt.analyze_report(model, rep, kernel_lattice_of(spec), irr)


def _charts(spec: RingSpec, args) -> dict:
    if not args.support:
        raise InputError("--support is required")
    try:
        J = parse_support(spec, args.support)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    return rpt.charts_report(spec, build_chart(spec, J))


def _zerosubring(spec: RingSpec, args) -> dict:
    hb = zero_subring_generators(spec)
    rels = binomial_relations(hb, args.relation_bound)
    return rpt.zerosubring_report(spec, hb, rels, args.relation_bound)


def _veronese(spec: RingSpec, args) -> dict:
    forms = parse_forms(args.forms, spec.s)
    return rpt.veronese_report(spec, forms, veronese_generators(spec, forms))


def _separation(spec: RingSpec, args) -> dict:
    model = build_model(spec, max_vars=args.max_vars)
    return rpt.separation_report(spec, separation_verdict(model))


COMMANDS = {
    "analyze": (_analyze, "full analysis of Proj(S)"),
    "charts": (_charts, "chart data for one relevant support"),
    "zerosubring": (_zerosubring, "generators and small relations of the degree-zero subring"),
    "veronese": (_veronese, "generators of a Veronese subring cut out by linear forms"),
    "separation": (_separation, "pairwise separation table and verdict"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("spec", help="ring spec file (JSON)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS,
                        help="cap on the number of variables for support enumeration")
    common.add_argument("--relation-bound", type=int, default=DEFAULT_RELATION_BOUND,
                        help="L1 bound for the binomial relation search")

    parser = argparse.ArgumentParser(
        prog="multiproj",
        description="Homogeneous spectra of multigraded polynomial rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "charts":
            p.add_argument("--support", help="comma-separated variable names, e.g. X1,Z")
        if name == "veronese":
            p.add_argument("--forms", default="",
                           help="linear forms on Z^s: entries comma-separated, forms ';'-separated")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        spec = load_spec(args.spec)
        report = handler(spec, args)
    except (InputError, SpecError, IrrelevantSupportError, TorsionUnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ResourceLimitError, ArithmeticOverflowError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalInconsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        sys.stdout.write(rpt.dumps_json(report))
    else:
        sys.stdout.write(rpt.render_text(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
