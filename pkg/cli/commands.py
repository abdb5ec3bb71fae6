"""
frobmaps command line

    frobmaps check --preset paper-monomial --p 2 --e-max 3 --format json
    frobmaps check --input problem.txt --both-paths
    frobmaps op colon --input problem.txt

Exit status: 0 on a completed run (whatever the verdicts), 1 on usage, input
or configuration errors, 2 on computation errors (the partial report is still
printed).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from pydantic import ValidationError

from algebra.polynomial import render_polynomial
from cli.parser import USER_ORDERS, parse_problem
from cli.presets import PRESETS, get_preset
from cli.report import ReportFormat, build_report, render_report
from cli.schemas import OperationReport, ProblemEcho, ProblemFile
from config import Config
from core.error_handling import COMPUTATION_ERRORS, ConfigurationError, FrobeniusError, InputError, log_errors
from frobenius.ladder import FrobeniusConfig, run_ladder
from groebner.ideal import ComputePath
from groebner.operations import (
    bracket_power,
    ideal_colon,
    ideal_intersection,
    ideal_membership,
    ideal_product,
    use_monomial_kernel,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2

OPERATIONS = ("colon", "intersect", "product", "bracket", "gb", "member")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; 2 is reserved for computation errors here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="frobmaps", description="Frobenius-map ideal data in prime characteristic")
    parser.add_argument("--version", action="version", version=f"%(prog)s {Config.VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=[f.value for f in ReportFormat], default=ReportFormat.JSON.value)
        p.add_argument("--force-groebner", action="store_true", help="use the Gröbner engine even on monomial input")
        p.add_argument("--max-basis-size", type=_positive_int, help="Buchberger basis-size ceiling")
        p.add_argument("--order", choices=USER_ORDERS, help="monomial order (overrides the problem file)")

    check = sub.add_parser("check", help="run the finite-generation ladder")
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", choices=sorted(PRESETS))
    source.add_argument("--input", type=Path, help="problem file")
    check.add_argument("--p", type=int, help="characteristic (overrides file and preset)")
    check.add_argument("--e-max", type=_positive_int)
    check.add_argument("--brute-force-L", dest="brute_force_l", action="store_true", help="enumerate compositions")
    check.add_argument("--both-paths", action="store_true", help="compare monomial and groebner paths")
    check.add_argument("--omit-timings", action="store_true")
    check.add_argument("--workers", type=_positive_int)
    common(check)
    check.set_defaults(handler=run_check)

    op = sub.add_parser("op", help="a single ideal operation")
    op.add_argument("operation", choices=OPERATIONS)
    op.add_argument("--input", type=Path, required=True, help="problem file")
    common(op)
    op.set_defaults(handler=run_op)

    return parser


# =============================================================================
# HELPERS
# =============================================================================


def _load_problem(args: argparse.Namespace) -> ProblemFile:
    p = getattr(args, "p", None)
    if getattr(args, "preset", None):
        problem = parse_problem(f"preset = {args.preset}\n", p_override=p)
    else:
        try:
            text = args.input.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
        problem = parse_problem(text, p_override=p)
    if args.order:
        problem = problem.model_copy(update={"order": args.order})
    return problem


def _path(args: argparse.Namespace) -> ComputePath:
    return ComputePath.GROEBNER if args.force_groebner else ComputePath.AUTO


def _emit(text: str, out: TextIO) -> None:
    out.write(text)
    out.flush()


# =============================================================================
# COMMANDS
# =============================================================================


@log_errors(reraise=True, log_level="warning")
def run_check(args: argparse.Namespace, out: TextIO) -> int:
    problem = _load_problem(args).with_e_max(args.e_max)
    e_max = problem.e_max or 1
    preset = get_preset(problem.preset) if problem.preset else None
    ideal = problem.ideal()

    def ladder_for(path: ComputePath):
        config = FrobeniusConfig(
            ideal=ideal,
            e_max=e_max,
            path=path,
            brute_force_l=args.brute_force_l,
            workers=args.workers or Config.WORKERS,
            closed_form=preset.closed_form if preset else None,
        )
        return run_ladder(config)

    path = _path(args)
    ladder = ladder_for(path)
    comparison = None
    if args.both_paths:
        if use_monomial_kernel(ComputePath.AUTO, ideal) and path is ComputePath.AUTO:
            comparison = ladder_for(ComputePath.GROEBNER)
        else:
            logger.warning("--both-paths needs a monomial ideal on the default path; comparison skipped")

    report = build_report(problem, ladder, comparison)
    _emit(render_report(report, ReportFormat(args.format), omit_timings=args.omit_timings), out)
    failed = ladder.failed or (comparison is not None and comparison.failed)
    return EXIT_COMPUTATION if failed else EXIT_OK


@log_errors(reraise=True, log_level="warning")
def run_op(args: argparse.Namespace, out: TextIO) -> int:
    problem = _load_problem(args)
    context = problem.ring()
    ideal = problem.ideal(context)
    path = _path(args)
    operation = args.operation

    result = None
    member = None
    rendered: List[str] = []
    if operation in ("colon", "intersect", "product"):
        if not problem.other:
            raise InputError(f"operation {operation} needs an 'other = ...' line")
        other = problem.other_ideal(context)
        func = {"colon": ideal_colon, "intersect": ideal_intersection, "product": ideal_product}[operation]
        result = func(ideal, other, path)
        taken = "monomial" if use_monomial_kernel(path, ideal, other) else "groebner"
    elif operation == "bracket":
        result = bracket_power(ideal, problem.e, path)
        taken = "monomial" if use_monomial_kernel(path, ideal) else "groebner"
    elif operation == "gb":
        taken = "groebner"
        basis = ideal.groebner_basis()
        logger.debug(f"basis statistics: {basis.stats.to_dict()}")
        rendered = [render_polynomial(g) for g in basis.elements]
    else:
        element = problem.element_polynomial(context)
        if element is None:
            raise InputError("operation member needs an 'element = ...' line")
        member = ideal_membership(element, ideal, path)
        taken = "monomial" if use_monomial_kernel(path, ideal) else "groebner"

    if result is not None:
        rendered = [render_polynomial(g) for g in result.canonical_generators()]
    report = OperationReport(
        operation=operation,
        problem=ProblemEcho.from_problem(problem),
        path=taken,
        result=rendered if member is None else None,
        member=member,
        version=Config.VERSION,
    )
    if ReportFormat(args.format) is ReportFormat.TEXT:
        body = f"member: {'yes' if member else 'no'}" if member is not None else "\n".join(rendered)
        _emit(f"{operation} ({taken})\n{body}\n", out)
    else:
        _emit(report.model_dump_json(indent=2) + "\n", out)
    return EXIT_OK


def run_cli(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse argv, run the command, return the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    saved_limit = Config.MAX_BASIS_SIZE
    if args.max_basis_size:
        Config.MAX_BASIS_SIZE = args.max_basis_size

    try:
        return args.handler(args, out)
    except (InputError, ConfigurationError, ValidationError) as exc:
        print(f"frobmaps: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except COMPUTATION_ERRORS as exc:
        print(f"frobmaps: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    except FrobeniusError as exc:
        print(f"frobmaps: error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    finally:
        Config.MAX_BASIS_SIZE = saved_limit
