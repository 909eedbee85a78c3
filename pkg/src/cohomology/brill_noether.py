"""
Module: brill_noether.py
Part of the Restriction Stability Toolkit.

Brill-Noether numbers of restricted bundles, the unexpected-sections tests
on P² and on Hirzebruch surfaces, and moduli-dimension bookkeeping.

Public API:
    BNReport, RestrictionMapDims
    brill_noether_rho(), brill_noether_rho_chi()
    unexpected_sections_p2(), first_unexpected_degree_p2()
    unexpected_sections_hirzebruch(), first_unexpected_b_hirzebruch()
    ogrady_dimension(), restriction_map_dims()

The "d ≫ 0" of the asymptotic statements is made effective by bounded scans
that report the first degree (or F-coefficient) where every hypothesis, the
stability gate and the inequality hold at once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from src.cohomology.betti import ch_betti_hirzebruch, closed_form_values, gh_betti_p2
from src.lattice.chern import (
    ChernCharacter,
    TwistContext,
    classical_discriminant,
    euler_char,
    euler_char_p2,
    minimizing_twist,
    p2_discriminant,
    require_sheaf_like,
    tensor_line,
)
from src.lattice.surface import DivisorClass, SurfaceKind, SurfaceModel, genus_of_curve, intersect, is_ample
from src.p2.exceptional import DEFAULT_DEPTH, has_picard_rank_two
from src.stability.criteria import general_surface, plane_general
from src.utils import messages
from src.utils.errors import HypothesisFailed, NonPositiveHC, NotAmple, RankZero

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

PICARD_RANK_TWO = "M(v) has Picard rank 2"


def brill_noether_rho(r: Number, e: Number, g: Number, k: Number) -> Fraction:
    """ρ = r²(g−1) + 1 − k(k − e + r(g−1))."""
    r, e, g, k = (Fraction(x) for x in (r, e, g, k))
    return r * r * (g - 1) + 1 - k * (k - e + r * (g - 1))


def brill_noether_rho_chi(r: Number, e: Number, g: Number, k: Number) -> Fraction:
    """ρ = dim U_C(r, e) − k(k − χ) with χ = e + r(1 − g)."""
    r, e, g, k = (Fraction(x) for x in (r, e, g, k))
    chi = e + r * (1 - g)
    return r * r * (g - 1) + 1 - k * (k - chi)


@dataclass(frozen=True)
class BNReport:
    r: int
    e: Fraction
    g: Fraction
    k: Fraction
    rho: Fraction
    violating: bool
    d: int
    hypotheses: Tuple[str, ...] = ()
    failed_hypotheses: Tuple[str, ...] = ()
    inequality: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def hypotheses_hold(self) -> bool:
        return not self.failed_hypotheses

    def to_dict(self) -> dict:
        data = {
            "d": self.d,
            "r": self.r,
            "e": str(self.e),
            "g": str(self.g),
            "k": str(self.k),
            "rho": str(self.rho),
            "violating": self.violating,
            "hypotheses": list(self.hypotheses),
            "failed_hypotheses": list(self.failed_hypotheses),
        }
        if self.inequality is not None:
            data["inequality"] = {"lhs": str(self.inequality[0]), "rhs": str(self.inequality[1])}
        return data


def _check(holds: bool, name: str, passed: List[str], failed: List[str]) -> None:
    (passed if holds else failed).append(name)


def _finish(report: BNReport, strict: bool) -> BNReport:
    if report.failed_hypotheses and strict:
        hypothesis = "; ".join(report.failed_hypotheses)
        raise HypothesisFailed(
            messages.CohomologyMessages.hypothesis_failed.format(hypothesis=hypothesis), report=report)
    return report


def unexpected_sections_p2(
    v: ChernCharacter, d: int, depth: int = DEFAULT_DEPTH, strict: bool = True
) -> BNReport:
    """
    ρ for E|_C on a plane curve of degree d, with k = h⁰(E|_C) from the closed form.

    Checked hypotheses: H⁰(E) ≠ 0, H²(E(−C)) ≠ 0, χ(E) > r, Picard rank 2 of
    M(v) (Δ > δ(μ), required by the stability gate) and the stability
    gate d² > 8Δ + 4. With ``strict`` a failed hypothesis raises
    ``HypothesisFailed`` carrying the report.
    """
    p2 = SurfaceModel.projective_plane()
    require_sheaf_like(v, p2)
    r = v.ch0
    passed: List[str] = []
    failed: List[str] = []
    _check(bool(gh_betti_p2(v).h0), "H^0(E) != 0", passed, failed)
    _check(bool(gh_betti_p2(tensor_line(v, p2.divisor(-d), p2)).h2), "H^2(E(-C)) != 0", passed, failed)
    _check(euler_char_p2(v) > r, "chi(E) > r", passed, failed)
    _check(has_picard_rank_two(v, depth), PICARD_RANK_TWO, passed, failed)
    gate = plane_general(v, d, depth, enforce_picard_rank=False)
    _check(gate.satisfied, f"E|_C stable: d^2 = {gate.lhs} > 8Delta + 4 = {gate.rhs}", passed, failed)
    # the gate carries its own Picard-rank verdict; the explicit check above replaces it
    passed.extend(h for h in gate.hypotheses if "Picard rank" not in h and h not in passed)

    k, _ = closed_form_values(v, d)
    e = Fraction(d) * v.ch1.coefficients[0]
    g = Fraction((d - 1) * (d - 2), 2)
    rho = brill_noether_rho(r, e, g, k)
    report = BNReport(r, e, g, k, rho, rho < 0, d, tuple(passed), tuple(failed))
    return _finish(report, strict)


def first_unexpected_degree_p2(
    v: ChernCharacter, d_max: int, depth: int = DEFAULT_DEPTH
) -> Optional[BNReport]:
    """First d ≤ d_max where every hypothesis holds and ρ < 0."""
    for d in range(1, d_max + 1):
        report = unexpected_sections_p2(v, d, depth, strict=False)
        if report.hypotheses_hold and report.violating:
            return report
    logger.info(messages.CriteriaMessages.not_found.format(criterion="unexpected sections", d_max=d_max))
    return None


def unexpected_sections_hirzebruch(
    v: ChernCharacter, m: int, a: int, b: int, d: int, strict: bool = True
) -> BNReport:
    """
    r²(g−1) + 1 < χ(E)(χ(E) − e + rg) on F_m for C = dH, H = aM + bF.

    Hypotheses: a ≥ 2, ν·F < 0, E has only H⁰, χ(E) > r, and the
    general-surface criterion at the minimizing twist as stability gate.
    ``violating`` needs both the inequality and the gate.
    """
    surface = SurfaceModel.hirzebruch(m)
    H = surface.divisor(a, b)
    if not is_ample(surface, H):
        raise NotAmple(messages.CriteriaMessages.not_ample.format(polarization=H, surface=surface.label))
    require_sheaf_like(v, surface)
    r = v.ch0
    C = H * d
    chi = euler_char(v, surface)
    g = genus_of_curve(surface, C)
    e = intersect(surface, v.ch1, C)

    passed: List[str] = []
    failed: List[str] = []
    _check(a >= 2, "a >= 2", passed, failed)
    _check(intersect(surface, v.ch1, surface.divisor(0, 1)) < 0, "nu.F < 0", passed, failed)
    table = ch_betti_hirzebruch(v, m)
    _check(bool(table.h0) and table.h1 == 0 and table.h2 == 0, "E has only H^0", passed, failed)
    _check(chi > r, "chi(E) > r", passed, failed)
    gate = general_surface(v, C, TwistContext.build(surface, H, minimizing_twist(v, H, surface)), surface)
    _check(gate.satisfied, f"E|_C stable: {gate.lhs} > {gate.rhs}", passed, failed)

    lhs = r * r * (g - 1) + 1
    rhs = chi * (chi - e + r * g)
    violating = lhs < rhs and gate.satisfied
    report = BNReport(r, e, g, chi, brill_noether_rho(r, e, g, chi), violating, d,
                      tuple(passed), tuple(failed), (lhs, rhs))
    return _finish(report, strict)


def first_unexpected_b_hirzebruch(
    v: ChernCharacter, m: int, a: int, d: int, b_max: int
) -> Optional[Tuple[int, BNReport]]:
    """Scan b from the first ample value a·m + 1 up to b_max."""
    for b in range(a * m + 1, b_max + 1):
        report = unexpected_sections_hirzebruch(v, m, a, b, d, strict=False)
        if report.hypotheses_hold and report.violating:
            return b, report
    return None


def ogrady_dimension(v: ChernCharacter, surface: SurfaceModel) -> Fraction:
    """Expected dimension 2r²Δ − (r² − 1)χ(O_X)."""
    if v.ch0 <= 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity="moduli dimension"))
    r = v.ch0
    return 2 * r * r * classical_discriminant(v, surface) - (r * r - 1) * surface.chi_structure_sheaf


@dataclass(frozen=True)
class RestrictionMapDims:
    dim_moduli: Fraction
    dim_curve_moduli: Fraction
    codim: Fraction
    genus: Fraction = field(default=Fraction(0))

    def to_dict(self) -> dict:
        return {
            "dim_moduli": str(self.dim_moduli),
            "dim_curve_moduli": str(self.dim_curve_moduli),
            "codim": str(self.codim),
            "genus": str(self.genus),
        }


def restriction_map_dims(
    v: ChernCharacter, surface: SurfaceModel, C: DivisorClass, ctx: TwistContext
) -> RestrictionMapDims:
    """dim M(v), dim U_C(r, e) = r²(g−1) + 1 and their difference."""
    if v.ch0 <= 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity="moduli dimension"))
    hc = intersect(surface, ctx.H, C)
    if hc <= 0:
        raise NonPositiveHC(messages.WallMessages.non_positive_hc.format(value=hc))
    r = v.ch0
    if surface.kind is SurfaceKind.PROJECTIVE_PLANE:
        dim_m = r * r * (2 * p2_discriminant(v) - 1) + 1
    else:
        dim_m = ogrady_dimension(v, surface)
    g = genus_of_curve(surface, C)
    dim_u = r * r * (g - 1) + 1
    return RestrictionMapDims(dim_m, dim_u, dim_u - dim_m, g)
