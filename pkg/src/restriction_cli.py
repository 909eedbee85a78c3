"""
Module: restriction_cli.py
Part of the Restriction Stability Toolkit.

Command-line entry point for the Restriction Stability Toolkit.

Subcommands
-----------
check-restriction   Evaluate every applicable criterion on the document's
                    curve, or sweep d = 1..d_max with ``--sweep``.
walls               Restriction wall, Gieseker-bound wall, category window
                    and effective wall center; SVG plus a CSV of exact data.
exceptional         Enumerate exceptional slopes, or locate the interval of
                    μ₀ for a P² character with ``--find "(r,deg,ch2)"``.
cohomology          Betti tables of E, E(−C) and E|_C, ρ and dimensions.

Exit codes
----------
0   Success (check-restriction: some criterion is satisfied).
1   check-restriction only: no criterion is satisfied.
2   Input or validation error; a one-line diagnostic goes to stderr.
3   The restriction sequence leaves the case undetermined.

Settings precedence: CLI flag > document ``options`` > profile > defaults.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.cohomology.betti import betti_table, restricted_betti
from src.cohomology.brill_noether import (
    BNReport,
    brill_noether_rho,
    restriction_map_dims,
    unexpected_sections_hirzebruch,
    unexpected_sections_p2,
)
from src.config.profile_manager import ProfileManager
from src.documents.input_document import InputDocument, OUTPUT_FORMATS, read_document
from src.export.export_manager import ExportManager
from src.export.wall_plot import WALL_COLUMNS, WallDiagram, render_svg, wall_rows
from src.lattice.chern import ChernCharacter, euler_char, tensor_line
from src.lattice.surface import DivisorClass, SurfaceKind, genus_of_curve, intersect
from src.p2.exceptional import (
    effective_wall_center,
    enumerate_exceptional,
    find_interval,
    interval,
    mu0,
)
from src.stability.criteria import (
    CriterionReport,
    applicable_criteria,
    compare,
    curve_multiple,
    evaluate,
    general_surface,
    minimal_degrees,
)
from src.stability.walls import category_window, gieseker_bound_wall, restriction_wall, restriction_wall_forms
from src.utils import messages
from src.utils.errors import RestrictionError, UndeterminedCase, ValidationError
from src.utils.rationals import approximate, format_rational, parse_integer, parse_rational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNSATISFIED = 1
EXIT_INPUT_ERROR = 2
EXIT_UNDETERMINED = 3

CRITERION_COLUMNS = ("criterion", "name", "d", "lhs", "rhs", "satisfied", "conclusion")
MINIMAL_COLUMNS = ("criterion", "name", "minimal_d")
EXCEPTIONAL_COLUMNS = ("p", "q", "alpha", "rank", "delta", "interval_lo", "interval_hi",
                       "interval_lo_approx", "interval_hi_approx")
REPORT_COLUMNS = ("quantity", "value")


@dataclass
class Settings:
    depth: int
    d_max: int
    output: str
    max_depth: int
    max_peel: int
    picard_rank_policy: str
    float_digits: int

    @property
    def enforce_picard_rank(self) -> bool:
        return self.picard_rank_policy == "enforce"


def parse_args(argv=None):
    """
    Parse command-line arguments.

    Args:
        argv (list[str] | None): Argument list; ``sys.argv[1:]`` when ``None``.

    Returns:
        argparse.Namespace with ``command`` and the subcommand's options.
    """
    parser = argparse.ArgumentParser(
        prog="restriction-stability",
        description=(
            "Exact checks of stability of restrictions of sheaves on surfaces to curves,\n"
            "Bridgeland walls and exceptional slopes on the projective plane."
        ),
    )
    parser.add_argument("--verbose", "-v", action="store_true", default=False,
                        help="Log at DEBUG level on stderr.")
    parser.add_argument("--profile", default=None, help="Settings profile name (default: the active profile).")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=OUTPUT_FORMATS, default=None, help="Output format.")
    common.add_argument("--depth", type=int, default=None, help="Dyadic depth for exceptional slopes.")
    common.add_argument("--out", default=None, help="Write output to this file instead of stdout.")
    common.add_argument("--dmax", dest="d_max", type=int, default=None, help="Largest d in a sweep.")

    document = argparse.ArgumentParser(add_help=False)
    document.add_argument("--input", "-i", dest="input_file", required=True,
                          help="Input JSON document, or '-' for stdin.")

    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check-restriction", parents=[common, document],
                                  help="Evaluate restriction-stability criteria.")
    check.add_argument("--sweep", action="store_true", default=False,
                       help="Sweep d = 1..d_max and report minimal degrees.")

    subparsers.add_parser("walls", parents=[common, document], help="Walls in the (s, t) half-plane.")

    exceptional = subparsers.add_parser("exceptional", parents=[common], help="Exceptional slopes on P2.")
    exceptional.add_argument("--window", nargs=2, metavar=("LO", "HI"), default=("0", "1"),
                             help="Open slope window, as rationals.")
    exceptional.add_argument("--find", default=None, metavar="CHARACTER",
                             help='Locate the interval containing mu0 of a P2 character "(r,deg,ch2)".')

    subparsers.add_parser("cohomology", parents=[common, document], help="Betti tables and Brill-Noether data.")

    return parser.parse_args(argv)


def resolve_settings(args: argparse.Namespace, doc: Optional[InputDocument]) -> Settings:
    """CLI flag > document options > profile > defaults."""
    values = ProfileManager().resolve_settings(args.profile)
    if doc is not None:
        values.update(doc.options)
    for key in ("depth", "d_max", "output"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    settings = Settings(**values)
    if settings.depth < 0 or settings.depth > settings.max_depth:
        raise ValidationError(messages.ExceptionalMessages.depth_capped.format(
            depth=settings.depth, bound=settings.max_depth))
    if settings.d_max < 0:
        raise ValidationError(messages.DocumentMessages.bad_option.format(value=settings.d_max, key="d_max"))
    return settings


def _emit(rows: Sequence[Dict[str, Any]], columns: Sequence[str], settings: Settings,
          header: Dict[str, Any], out: Optional[str], extra: Optional[Dict[str, Any]] = None) -> None:
    if settings.output == "svg":
        raise ValidationError(messages.ExportMessages.unsupported_format.format(format="svg"))
    result = ExportManager().export({
        "format": settings.output,
        "rows": list(rows),
        "columns": list(columns),
        "header": header,
        "extra": extra,
        "output_path": out,
    })
    if not result["success"]:
        raise ValidationError(result["message"])
    if not out:
        sys.stdout.write(result["text"])


def _hypotheses(reports: Sequence[CriterionReport]) -> List[str]:
    seen: List[str] = []
    for report in reports:
        for item in report.hypotheses:
            if item not in seen:
                seen.append(item)
    return seen


def cmd_check_restriction(args: argparse.Namespace) -> int:
    doc = read_document(args.input_file)
    settings = resolve_settings(args, doc)
    v, surface, ctx = doc.character, doc.surface, doc.context
    enforce = settings.enforce_picard_rank

    if args.sweep:
        reports = compare(v, ctx, surface, settings.d_max, settings.depth, enforce)
        minimal = minimal_degrees(reports)
        rows = [
            {"criterion": name.value, "name": name.title, "minimal_d": format_rational(d)}
            for name, d in minimal.items()
        ]
        header = dict(doc.header(), d_max=settings.d_max, hypotheses=_hypotheses(reports))
        _emit(rows, MINIMAL_COLUMNS, settings, header, args.out,
              {"sweep": [report.to_row() for report in reports]})
        return EXIT_OK if any(d is not None for d in minimal.values()) else EXIT_UNSATISFIED

    C = doc.require_curve()
    d = curve_multiple(C, doc.polarization)
    if d is not None:
        reports = [evaluate(name, v, ctx, surface, d, settings.depth, enforce)
                   for name in applicable_criteria(v, surface)]
    elif v.ch0 >= 2:
        reports = [general_surface(v, C, ctx, surface)]
    else:
        reports = []

    rows = []
    for report in reports:
        rows.append(report.to_row())
        if report.companion is not None:
            rows.append(report.companion.to_row())
        for note in report.notes:
            logger.warning(note)
    header = dict(doc.header(), hypotheses=_hypotheses(reports))
    _emit(rows, CRITERION_COLUMNS, settings, header, args.out)
    return EXIT_OK if any(report.satisfied for report in reports) else EXIT_UNSATISFIED


def build_wall_diagram(doc: InputDocument, settings: Settings) -> WallDiagram:
    v, surface, ctx = doc.character, doc.surface, doc.context
    C = doc.require_curve()
    d = curve_multiple(C, doc.polarization)
    if d is None:
        restriction = restriction_wall_forms(v, C, ctx, surface).wall
    else:
        restriction = restriction_wall(v, C, ctx, surface)
    diagram = WallDiagram(title=f"{surface.label}, v = {v}, C = {doc.header()['curve']}")
    diagram.walls.append(("restriction wall", restriction))
    if not restriction.is_semicircle:
        diagram.annotations.append("no wall: d^2 <= 8Delta")
    if v.ch0 >= 2:
        diagram.walls.append(("Gieseker bound wall", gieseker_bound_wall(v, ctx, surface)))
    diagram.window = category_window(v, C, ctx, surface)
    if surface.kind is SurfaceKind.PROJECTIVE_PLANE and ctx.D.is_zero():
        try:
            diagram.ticks.append(("effective wall center", effective_wall_center(v, settings.depth)))
        except RestrictionError as exc:
            diagram.annotations.append(f"effective wall center unavailable: {exc}")
    return diagram


def cmd_walls(args: argparse.Namespace) -> int:
    doc = read_document(args.input_file)
    settings = resolve_settings(args, doc)
    diagram = build_wall_diagram(doc, settings)
    rows = wall_rows(diagram, settings.float_digits)
    header = dict(doc.header(), notes=diagram.annotations)

    if (args.out and Path(args.out).suffix.lower() == ".svg") or settings.output == "svg":
        if not args.out:
            raise ValidationError("SVG output needs --out FILE.svg")
        svg_path = render_svg(diagram, Path(args.out))
        csv_settings = Settings(**dict(vars(settings), output="csv"))
        _emit(rows, WALL_COLUMNS, csv_settings, header, str(svg_path.with_suffix(".csv")))
        return EXIT_OK

    _emit(rows, WALL_COLUMNS, settings, header, args.out)
    return EXIT_OK


def parse_p2_character(text: str) -> ChernCharacter:
    """Parse ``"(r,deg,ch2)"`` into a P² character."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [part.strip() for part in body.split(",")]
    if len(parts) != 3:
        raise ValidationError(messages.DocumentMessages.bad_rational.format(
            text=text, location="--find", reason='expected "(r,deg,ch2)"'))
    r = parse_integer(parts[0], "--find rank")
    deg = parse_rational(parts[1], "--find degree")
    ch2 = parse_rational(parts[2], "--find ch2")
    return ChernCharacter(r, DivisorClass.of(deg), ch2)


def exceptional_row(e, digits: int) -> Dict[str, Any]:
    """Exact endpoints of I_alpha as "a+b√n" strings plus approximate decimals."""
    lo, hi = interval(e)
    return dict(e.to_dict(), interval_lo=str(lo), interval_hi=str(hi),
                interval_lo_approx=approximate(lo, digits), interval_hi_approx=approximate(hi, digits))


def cmd_exceptional(args: argparse.Namespace) -> int:
    settings = resolve_settings(args, None)
    header: Dict[str, Any] = {"depth": settings.depth}
    if args.find:
        v = parse_p2_character(args.find)
        root = mu0(v)
        e = find_interval(root, settings.depth, settings.max_depth)
        row = dict(exceptional_row(e, settings.float_digits), mu0=str(root))
        header["character"] = str(v)
        _emit([row], EXCEPTIONAL_COLUMNS + ("mu0",), settings, header, args.out)
        return EXIT_OK

    window = (parse_rational(args.window[0], "--window lo"), parse_rational(args.window[1], "--window hi"))
    header["window"] = f"({window[0]}, {window[1]})"
    slopes = enumerate_exceptional(settings.depth, window, settings.max_depth)
    _emit([exceptional_row(e, settings.float_digits) for e in slopes], EXCEPTIONAL_COLUMNS, settings, header, args.out)
    return EXIT_OK


def _quantity(rows: List[Dict[str, str]], name: str, value: Any) -> None:
    if value is None:
        text = "undetermined"
    elif isinstance(value, bool):
        text = "true" if value else "false"
    elif isinstance(value, (int, Fraction)):
        text = format_rational(value)
    else:
        text = str(value)
    rows.append({"quantity": name, "value": text})


def unexpected_sections_report(doc: InputDocument, settings: Settings) -> Optional[BNReport]:
    """
    Unexpected-sections test for the document's curve, without raising on
    failed hypotheses.

    On P² the curve must be a positive multiple of the hyperplane class; on
    F_m a positive multiple of an integral polarization aM + bF. Returns
    ``None`` when the curve has no such form.
    """
    v, surface, C = doc.character, doc.surface, doc.require_curve()
    if surface.kind is SurfaceKind.PROJECTIVE_PLANE:
        d = curve_multiple(C, surface.divisor(1))
        if d is None:
            return None
        return unexpected_sections_p2(v, d, settings.depth, strict=False)
    if surface.kind is SurfaceKind.HIRZEBRUCH:
        d = curve_multiple(C, doc.polarization)
        a, b = doc.polarization.coefficients
        if d is None or a.denominator != 1 or b.denominator != 1:
            return None
        return unexpected_sections_hirzebruch(v, surface.m, int(a), int(b), d, strict=False)
    return None


def _unexpected_section_rows(rows: List[Dict[str, str]], doc: InputDocument, settings: Settings) -> None:
    try:
        report = unexpected_sections_report(doc, settings)
    except RestrictionError as exc:
        logger.warning(messages.CohomologyMessages.bn_unavailable.format(error=exc))
        _quantity(rows, "bn_violating", f"unavailable: {exc}")
        return
    if report is None:
        _quantity(rows, "bn_violating", "unavailable: C is not a multiple of an integral polarization")
        return
    _quantity(rows, "bn_violating", report.violating)
    _quantity(rows, "bn_hypotheses", "; ".join(report.hypotheses))
    _quantity(rows, "bn_failed_hypotheses", "; ".join(report.failed_hypotheses))
    _quantity(rows, "chi(E) > r", "chi(E) > r" in report.hypotheses)
    if report.inequality is not None:
        lhs, rhs = report.inequality
        _quantity(rows, "bn_inequality", f"{format_rational(lhs)} < {format_rational(rhs)}")



def cmd_cohomology(args: argparse.Namespace) -> int:
    doc = read_document(args.input_file)
    settings = resolve_settings(args, doc)
    v, surface, ctx = doc.character, doc.surface, doc.context
    C = doc.require_curve()
    twisted = tensor_line(v, -C, surface)
    header = dict(doc.header(), hypotheses=[
        "E general in its moduli space, user-asserted",
        "C integral, user-asserted",
        "E|_C stability checked separately by check-restriction",
    ])

    rows: List[Dict[str, str]] = []
    _quantity(rows, "chi(E)", euler_char(v, surface))
    _quantity(rows, "chi(E(-C))", euler_char(twisted, surface))
    for label, table in (("E", betti_table(v, surface, settings.max_peel)),
                         ("E(-C)", betti_table(twisted, surface, settings.max_peel))):
        for index, value in enumerate(table.as_tuple()):
            _quantity(rows, f"h{index}({label})", value)
        if table.branch:
            _quantity(rows, f"branch({label})", table.branch)
            _quantity(rows, f"peels({label})", table.peel_count)

    result = restricted_betti(surface, v, C, ctx, settings.depth, settings.max_peel)
    _quantity(rows, "case", result.case_label)
    _quantity(rows, "h0(E|_C)", result.h0)
    _quantity(rows, "h1(E|_C)", result.h1)

    e = intersect(surface, v.ch1, C)
    g = genus_of_curve(surface, C)
    _quantity(rows, "e", e)
    _quantity(rows, "g", g)
    _quantity(rows, "rho", brill_noether_rho(v.ch0, e, g, result.h0))
    dims = restriction_map_dims(v, surface, C, ctx)
    _quantity(rows, "dim M(v)", dims.dim_moduli)
    _quantity(rows, "dim U_C(r,e)", dims.dim_curve_moduli)
    _quantity(rows, "codim", dims.codim)
    _unexpected_section_rows(rows, doc, settings)

    _emit(rows, REPORT_COLUMNS, settings, header, args.out)
    return EXIT_OK


COMMANDS = {
    "check-restriction": cmd_check_restriction,
    "walls": cmd_walls,
    "exceptional": cmd_exceptional,
    "cohomology": cmd_cohomology,
}


def main(argv=None) -> int:
    """
    Run one subcommand and return its exit code.

    Args:
        argv (list[str] | None): CLI arguments. Defaults to ``sys.argv[1:]``.

    Returns:
        int: 0, 1, 2 or 3 as listed in the module docstring.
    """
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.info(messages.SystemMessages.app_start.format(command=args.command))
    try:
        code = COMMANDS[args.command](args)
    except UndeterminedCase as exc:
        print(messages.SystemMessages.undetermined.format(case=exc.case_label, error=exc), file=sys.stderr)
        if exc.h0_range is not None:
            lo, hi = exc.h0_range
            print(f"h0(E|_C) in [{lo}, {hi}]", file=sys.stderr)
        if exc.h1_range is not None:
            lo, hi = exc.h1_range
            print(f"h1(E|_C) in [{lo}, {hi}]", file=sys.stderr)
        code = EXIT_UNDETERMINED
    except RestrictionError as exc:
        print(messages.SystemMessages.input_error.format(error=exc), file=sys.stderr)
        code = EXIT_INPUT_ERROR
    logger.info(messages.SystemMessages.exit_code.format(code=code, command=args.command))
    return code


if __name__ == "__main__":
    sys.exit(main())
