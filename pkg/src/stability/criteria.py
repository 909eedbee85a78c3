"""
Module: criteria.py
Part of the Restriction Stability Toolkit.

Sufficient conditions for the restriction E|_C of a stable sheaf to a curve
to stay (semi)stable, evaluated exactly, plus minimal-degree searches and
side-by-side sweeps.

Criteria
--------
FLENNER           d − 1/d > H²·max((r²−1)/4, 1) − 2                 semistable
BOGOMOLOV         2d > C(r,⌊r/2⌋)·C(r−2,⌊r/2⌋−1)·r·Δ + 1            stable
LANGER            d/2 > r(r−1)Δ + 1/(2r(r−1)H²)                     (semi)stable
GENERAL_SURFACE   C²/(2H·C) − ch1^D·C/(rH·C) + μ > r(r−1)H²Δ_{H,D} + 1/(2r(r−1)H²)
PLANE_GENERAL     d² > 8Δ + 4 on P², M(v) of Picard rank 2           stable
HIRZEBRUCH_LEMMA  d > 2r(r−1)(ab − a²m)Δ_H on F_m, H = aM + bF        semistable

Each report keeps lhs and rhs as Fractions; ``satisfied`` is derived from
them so it can never disagree. Hypotheses the code cannot check are carried
as strings on every report.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from src.lattice.chern import (
    ChernCharacter,
    TwistContext,
    classical_discriminant,
    discriminant,
    minimizing_twist,
    p2_discriminant,
    p2_slope,
    slope,
    twist,
)
from src.lattice.surface import DivisorClass, SurfaceKind, SurfaceModel, intersect, is_ample
from src.p2.exceptional import DEFAULT_DEPTH, dlp_delta, has_picard_rank_two
from src.utils import messages
from src.utils.errors import (
    BadDegree,
    NonPositiveHC,
    NotAmple,
    NotPicardRankTwo,
    RankTooSmall,
    WrongSurface,
)
from src.utils.rationals import format_rational

logger = logging.getLogger(__name__)

C_GENERAL = "C general of class dH, user-asserted"
C_INTEGRAL = "C integral, user-asserted"
C_SMOOTH = "C smooth, user-asserted"
E_SEMISTABLE = "E mu_H-semistable, user-asserted"
E_STABLE = "E mu_H-stable, user-asserted"
E_TWISTED_STABLE = "E mu_{H,D}-(semi)stable, user-asserted"
E_GENERAL = "E general in moduli"
H_AMPLE_ASSERTED = "H ample, user-asserted"


class CriterionName(str, Enum):
    FLENNER = "flenner"
    BOGOMOLOV = "bogomolov"
    LANGER = "langer"
    GENERAL_SURFACE = "general_surface"
    PLANE_GENERAL = "plane_general"
    HIRZEBRUCH_LEMMA = "hirzebruch_lemma"
    GENERAL_SURFACE_COROLLARY = "general_surface_corollary"

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    CriterionName.FLENNER: "Flenner",
    CriterionName.BOGOMOLOV: "Bogomolov",
    CriterionName.LANGER: "Langer",
    CriterionName.GENERAL_SURFACE: "General surface",
    CriterionName.PLANE_GENERAL: "Plane, general sheaf",
    CriterionName.HIRZEBRUCH_LEMMA: "Hirzebruch lemma",
    CriterionName.GENERAL_SURFACE_COROLLARY: "General surface, C = dH",
}

SWEEP_ORDER = (
    CriterionName.FLENNER,
    CriterionName.BOGOMOLOV,
    CriterionName.LANGER,
    CriterionName.GENERAL_SURFACE,
    CriterionName.PLANE_GENERAL,
    CriterionName.HIRZEBRUCH_LEMMA,
)


class Conclusion(str, Enum):
    STABLE = "stable"
    SEMISTABLE = "semistable"


@dataclass(frozen=True)
class CriterionReport:
    """One criterion evaluated on one curve."""

    name: CriterionName
    d: Optional[int]
    lhs: Fraction
    rhs: Fraction
    conclusion: Conclusion
    hypotheses: Tuple[str, ...] = ()
    companion: Optional["CriterionReport"] = None
    notes: Tuple[str, ...] = ()

    @property
    def satisfied(self) -> bool:
        return self.lhs > self.rhs

    def to_row(self) -> Dict[str, object]:
        return {
            "criterion": self.name.value,
            "name": self.name.title,
            "d": "" if self.d is None else self.d,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "satisfied": "true" if self.satisfied else "false",
            "conclusion": self.conclusion.value,
        }


def _report(name: CriterionName, d: Optional[int], lhs: Fraction, rhs: Fraction,
            conclusion: Conclusion, hypotheses: Iterable[str], **extra) -> CriterionReport:
    report = CriterionReport(name, d, Fraction(lhs), Fraction(rhs), conclusion, tuple(hypotheses), **extra)
    logger.debug(messages.CriteriaMessages.evaluated.format(
        criterion=name.value, d=d, lhs=report.lhs, rhs=report.rhs, satisfied=report.satisfied))
    return report


def _require_degree(d: int) -> None:
    if d < 1:
        raise BadDegree(messages.CriteriaMessages.bad_degree.format(d=d))


def _require_rank(v: ChernCharacter, minimum: int, operation: str) -> int:
    if v.ch0 < minimum:
        raise RankTooSmall(messages.WallMessages.rank_too_small.format(
            operation=operation, minimum=minimum, rank=v.ch0))
    return v.ch0


def _strictness(strict: bool) -> Conclusion:
    return Conclusion.STABLE if strict else Conclusion.SEMISTABLE


def _ample_hypotheses(surface: SurfaceModel) -> Tuple[str, ...]:
    return (H_AMPLE_ASSERTED,) if surface.kind is SurfaceKind.CUSTOM else ()


def flenner(v: ChernCharacter, H: DivisorClass, d: int, surface: SurfaceModel) -> CriterionReport:
    r = _require_rank(v, 1, "Flenner")
    _require_degree(d)
    h_squared = intersect(surface, H, H)
    lhs = d - Fraction(1, d)
    rhs = h_squared * max(Fraction(r * r - 1, 4), Fraction(1)) - 2
    return _report(CriterionName.FLENNER, d, lhs, rhs, Conclusion.SEMISTABLE,
                   (E_SEMISTABLE, C_GENERAL) + _ample_hypotheses(surface))


def bogomolov_restriction(v: ChernCharacter, H: DivisorClass, d: int, surface: SurfaceModel) -> CriterionReport:
    r = _require_rank(v, 2, "Bogomolov")
    _require_degree(d)
    half = r // 2
    coefficient = comb(r, half) * comb(r - 2, half - 1) * r
    lhs = Fraction(2 * d)
    rhs = coefficient * classical_discriminant(v, surface) + 1
    return _report(CriterionName.BOGOMOLOV, d, lhs, rhs, Conclusion.STABLE,
                   (E_STABLE, C_SMOOTH, "C of class dH") + _ample_hypotheses(surface))


def _langer_rhs(r: int, delta: Fraction, h_squared: Fraction) -> Fraction:
    return r * (r - 1) * delta + Fraction(1, 2 * r * (r - 1)) / h_squared


def langer(v: ChernCharacter, H: DivisorClass, d: int, surface: SurfaceModel, strict: bool = True) -> CriterionReport:
    r = _require_rank(v, 2, "Langer")
    _require_degree(d)
    rhs = _langer_rhs(r, classical_discriminant(v, surface), intersect(surface, H, H))
    return _report(CriterionName.LANGER, d, Fraction(d, 2), rhs, _strictness(strict),
                   (E_STABLE if strict else E_SEMISTABLE, C_INTEGRAL, "C of class dH") + _ample_hypotheses(surface))


def curve_multiple(C: DivisorClass, H: DivisorClass) -> Optional[int]:
    """``d`` when C = dH for a positive integer d, else ``None``."""
    factor = C.proportional_factor(H)
    if factor is None or factor <= 0 or factor.denominator != 1:
        return None
    return int(factor)


def general_surface(
    v: ChernCharacter,
    C: DivisorClass,
    ctx: TwistContext,
    surface: SurfaceModel,
    strict: bool = True,
) -> CriterionReport:
    """
    Theorem on arbitrary surfaces.

    When C = dH the companion report is the simplified inequality evaluated
    with D = minimizing_twist(v, H).
    """
    r = _require_rank(v, 2, "general surface criterion")
    hc = intersect(surface, ctx.H, C)
    if hc <= 0:
        raise NonPositiveHC(messages.WallMessages.non_positive_hc.format(value=hc))
    h_squared = intersect(surface, ctx.H, ctx.H)
    twisted = twist(v, ctx.D, surface)
    lhs = (intersect(surface, C, C) / (2 * hc)
           - intersect(surface, twisted.ch1, C) / (r * hc)
           + slope(v, ctx, surface))
    rhs = r * (r - 1) * h_squared * discriminant(v, ctx, surface) + Fraction(1, 2 * r * (r - 1)) / h_squared
    d = curve_multiple(C, ctx.H)
    hypotheses = (E_TWISTED_STABLE, C_INTEGRAL) + _ample_hypotheses(surface)
    companion = None
    if d is not None:
        corollary_rhs = _langer_rhs(r, classical_discriminant(v, surface), h_squared)
        companion = _report(
            CriterionName.GENERAL_SURFACE_COROLLARY, d, Fraction(d, 2), corollary_rhs, _strictness(strict),
            hypotheses + (f"D = minimizing twist {minimizing_twist(v, ctx.H, surface)}",))
    return _report(CriterionName.GENERAL_SURFACE, d, lhs, rhs, _strictness(strict), hypotheses, companion=companion)


def plane_general(
    v: ChernCharacter,
    d: int,
    depth: int = DEFAULT_DEPTH,
    enforce_picard_rank: bool = True,
    surface: Optional[SurfaceModel] = None,
) -> CriterionReport:
    """
    d² > 8Δ + 4 for the general E in M(v) on P².

    The Picard-rank-2 hypothesis Δ > δ(μ) raises ``NotPicardRankTwo`` when
    enforced; otherwise its failure is recorded among the hypotheses.
    """
    if (surface is not None and surface.kind is not SurfaceKind.PROJECTIVE_PLANE) or v.ch1.rank != 1:
        raise WrongSurface(messages.LatticeMessages.wrong_surface.format(operation="plane_general", expected="P2"))
    _require_rank(v, 1, "plane_general")
    _require_degree(d)
    delta = p2_discriminant(v)
    hypotheses = [E_GENERAL, C_INTEGRAL, "C of class dH"]
    if not has_picard_rank_two(v, depth):
        dlp = dlp_delta(p2_slope(v), depth)
        if enforce_picard_rank:
            raise NotPicardRankTwo(messages.CriteriaMessages.not_picard_rank_two.format(delta=delta, dlp=dlp))
        hypotheses.append(messages.CriteriaMessages.picard_rank_reported.format(delta=delta, dlp=dlp))
    else:
        hypotheses.append("M(v) has Picard rank 2")
    return _report(CriterionName.PLANE_GENERAL, d, Fraction(d * d), 8 * delta + 4, Conclusion.STABLE, hypotheses)


def hirzebruch_lemma(v: ChernCharacter, m: int, a: int, b: int, d: int) -> CriterionReport:
    """
    d > 2r(r−1)(ab − a²m)Δ_H on F_m with H = aM + bF.

    The general-surface theorem for C = dH and D = 0 is attached as the
    companion; a differing verdict is logged and noted.
    """
    surface = SurfaceModel.hirzebruch(m)
    H = surface.divisor(a, b)
    if not is_ample(surface, H):
        raise NotAmple(messages.CriteriaMessages.not_ample.format(polarization=H, surface=surface.label))
    r = _require_rank(v, 2, "Hirzebruch lemma")
    _require_degree(d)
    ctx = TwistContext.build(surface, H)
    delta_h = discriminant(v, ctx, surface)
    a_, b_ = Fraction(a), Fraction(b)
    rhs = 2 * r * (r - 1) * (a_ * b_ - a_ * a_ * m) * delta_h
    theorem = general_surface(v, H * d, ctx, surface, strict=False)
    lemma = _report(CriterionName.HIRZEBRUCH_LEMMA, d, Fraction(d), rhs, Conclusion.SEMISTABLE,
                    (E_SEMISTABLE, C_INTEGRAL, "C of class dH"), companion=theorem)
    if lemma.satisfied != theorem.satisfied:
        note = messages.CriteriaMessages.lemma_discrepancy.format(
            d=d, lemma=lemma.satisfied, theorem=theorem.satisfied)
        logger.warning(note)
        lemma = CriterionReport(lemma.name, lemma.d, lemma.lhs, lemma.rhs, lemma.conclusion,
                                lemma.hypotheses, lemma.companion, (note,))
    return lemma


def applicable_criteria(v: ChernCharacter, surface: SurfaceModel) -> List[CriterionName]:
    """Criteria whose rank and surface preconditions hold for ``v``."""
    names = []
    if v.ch0 >= 1:
        names.append(CriterionName.FLENNER)
    if v.ch0 >= 2:
        names.extend([CriterionName.BOGOMOLOV, CriterionName.LANGER, CriterionName.GENERAL_SURFACE])
    if surface.kind is SurfaceKind.PROJECTIVE_PLANE and v.ch0 >= 1:
        names.append(CriterionName.PLANE_GENERAL)
    if surface.kind is SurfaceKind.HIRZEBRUCH and v.ch0 >= 2:
        names.append(CriterionName.HIRZEBRUCH_LEMMA)
    return [name for name in SWEEP_ORDER if name in names]


def evaluate(
    criterion: CriterionName,
    v: ChernCharacter,
    ctx: TwistContext,
    surface: SurfaceModel,
    d: int,
    depth: int = DEFAULT_DEPTH,
    enforce_picard_rank: bool = True,
) -> CriterionReport:
    """Evaluate one criterion on the curve class dH."""
    if criterion is CriterionName.FLENNER:
        return flenner(v, ctx.H, d, surface)
    if criterion is CriterionName.BOGOMOLOV:
        return bogomolov_restriction(v, ctx.H, d, surface)
    if criterion is CriterionName.LANGER:
        return langer(v, ctx.H, d, surface)
    if criterion is CriterionName.GENERAL_SURFACE:
        _require_degree(d)
        return general_surface(v, ctx.H * d, ctx, surface)
    if criterion is CriterionName.PLANE_GENERAL:
        return plane_general(v, d, depth, enforce_picard_rank, surface)
    if criterion is CriterionName.HIRZEBRUCH_LEMMA:
        if surface.kind is not SurfaceKind.HIRZEBRUCH:
            raise WrongSurface(messages.LatticeMessages.wrong_surface.format(
                operation="hirzebruch_lemma", expected="a Hirzebruch surface"))
        a, b = ctx.H.coefficients
        return hirzebruch_lemma(v, surface.m, a, b, d)
    raise ValueError(f"criterion {criterion} is not evaluated on its own")


def minimal_degree(
    criterion: CriterionName,
    v: ChernCharacter,
    ctx: TwistContext,
    surface: SurfaceModel,
    d_max: int,
    depth: int = DEFAULT_DEPTH,
    enforce_picard_rank: bool = True,
) -> Optional[int]:
    """Smallest d in [1, d_max] that satisfies the criterion; ``None`` if there is none."""
    if d_max < 1:
        raise BadDegree(messages.CriteriaMessages.bad_degree.format(d=d_max))
    for d in range(1, d_max + 1):
        if evaluate(criterion, v, ctx, surface, d, depth, enforce_picard_rank).satisfied:
            return d
    logger.info(messages.CriteriaMessages.not_found.format(criterion=criterion.value, d_max=d_max))
    return None


def compare(
    v: ChernCharacter,
    ctx: TwistContext,
    surface: SurfaceModel,
    d_max: int,
    depth: int = DEFAULT_DEPTH,
    enforce_picard_rank: bool = False,
) -> List[CriterionReport]:
    """
    Every applicable criterion at every d in [1, d_max], ordered by
    (criterion, d). An empty degree range gives an empty table.

    The Picard-rank hypothesis of PLANE_GENERAL is reported rather than
    enforced unless asked, so boundary characters keep their row.
    """
    rows: List[CriterionReport] = []
    for criterion in applicable_criteria(v, surface):
        for d in range(1, d_max + 1):
            report = evaluate(criterion, v, ctx, surface, d, depth, enforce_picard_rank)
            logger.debug(messages.CriteriaMessages.sweep_row.format(
                criterion=criterion.value, d=d, satisfied=report.satisfied))
            rows.append(report)
    return rows


def minimal_degrees(reports: Iterable[CriterionReport]) -> Dict[CriterionName, Optional[int]]:
    """First satisfied d per criterion in a sweep; ``None`` when never satisfied."""
    result: Dict[CriterionName, Optional[int]] = {}
    for report in reports:
        result.setdefault(report.name, None)
        if report.satisfied and report.d is not None:
            current = result[report.name]
            if current is None or report.d < current:
                result[report.name] = report.d
    return result
