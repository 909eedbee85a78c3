"""
Module: betti.py
Part of the Restriction Stability Toolkit.

Betti numbers of the general stable sheaf on P² and on Hirzebruch surfaces,
and of its restriction to a curve through the long exact sequence of
0 → E(−C) → E → E|_C → 0.

Public API:
    BettiTable, RestrictedBetti
    gh_betti_p2()               -- at most one nonzero group on P².
    ch_betti_hirzebruch()       -- branch analysis on F_m with peeling and Serre duality.
    betti_table()               -- dispatch on the surface kind.
    restricted_betti()          -- (h⁰, h¹) of E|_C, or UndeterminedCase.
    restricted_closed_form_p2() -- closed form in the H⁰(E) ≠ 0, H²(E(−C)) ≠ 0 case.

``None`` in a table marks a component no branch determines.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from src.lattice.chern import (
    ChernCharacter,
    TwistContext,
    euler_char,
    euler_char_p2,
    p2_slope,
    require_sheaf_like,
    tensor_line,
)
from src.lattice.surface import DivisorClass, SurfaceKind, SurfaceModel, intersect
from src.p2.exceptional import DEFAULT_DEPTH, moduli_dimension_p2
from src.utils import messages
from src.utils.errors import (
    HypothesisFailed,
    NonPositiveHC,
    NonTermination,
    RankTooSmall,
    RankZero,
    UndeterminedCase,
    UnsupportedSurface,
)

logger = logging.getLogger(__name__)

MAX_PEEL = 10_000

Value = Optional[Fraction]


@dataclass(frozen=True)
class BettiTable:
    h0: Value
    h1: Value
    h2: Value
    branch: str = ""
    peel_count: int = 0

    @property
    def determined(self) -> bool:
        return None not in (self.h0, self.h1, self.h2)

    @property
    def euler(self) -> Value:
        if not self.determined:
            return None
        return self.h0 - self.h1 + self.h2

    def as_tuple(self) -> Tuple[Value, Value, Value]:
        return self.h0, self.h1, self.h2

    def nonzero_index(self) -> Optional[int]:
        """Index of the only nonzero group; ``None`` if zero or more than one."""
        nonzero = [i for i, h in enumerate(self.as_tuple()) if h]
        return nonzero[0] if len(nonzero) == 1 else None

    def reversed(self, branch: str) -> "BettiTable":
        return BettiTable(self.h2, self.h1, self.h0, branch, self.peel_count)

    def to_dict(self) -> dict:
        return {
            "h0": _text(self.h0),
            "h1": _text(self.h1),
            "h2": _text(self.h2),
            "branch": self.branch,
            "peels": self.peel_count,
        }


def _text(value: Value) -> str:
    return "undetermined" if value is None else str(value)


def _single_group(chi: Fraction, branch: str, peels: int = 0) -> BettiTable:
    if chi >= 0:
        return BettiTable(chi, Fraction(0), Fraction(0), branch, peels)
    return BettiTable(Fraction(0), -chi, Fraction(0), branch, peels)


def gh_betti_p2(v: ChernCharacter) -> BettiTable:
    """Cohomology of the general E ∈ M(v) on P², r ≥ 2."""
    if v.ch0 < 2:
        raise RankTooSmall(messages.CohomologyMessages.rank_too_small.format(rank=v.ch0))
    chi = euler_char_p2(v)
    if chi < 0:
        return BettiTable(Fraction(0), -chi, Fraction(0), "chi < 0")
    if p2_slope(v) > -3:
        return BettiTable(chi, Fraction(0), Fraction(0), "chi >= 0, mu > -3")
    return BettiTable(Fraction(0), Fraction(0), chi, "chi >= 0, mu <= -3")


def _nu_pairings(v: ChernCharacter, surface: SurfaceModel) -> Tuple[Fraction, Fraction]:
    M, F = surface.divisor(1, 0), surface.divisor(0, 1)
    return intersect(surface, v.ch1, F) / v.ch0, intersect(surface, v.ch1, M) / v.ch0


def _h0_without_peel(v: ChernCharacter, surface: SurfaceModel) -> Fraction:
    nu_f, _ = _nu_pairings(v, surface)
    if nu_f <= -1:
        return Fraction(0)
    return max(euler_char(v, surface), Fraction(0))


def ch_betti_hirzebruch(v: ChernCharacter, m: int, max_peel: int = MAX_PEEL) -> BettiTable:
    """
    Cohomology of the general stable E on F_m, ν = c₁/r.

    ν·F = −1:               only H¹.
    ν·F > −1, ν·M ≥ −1:     one group, by the sign of χ.
    ν·F > −1, ν·M < −1:     H⁰(E) = H⁰(E(−M)); peel until ν·M ≥ −1.
    ν·F < −1, r ≥ 2:        Serre duality with E^∨ ⊗ K.
    ν·F < −1, r = 1:        only h⁰ = 0 is known.
    """
    if v.ch0 <= 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity="Hirzebruch Betti table"))
    surface = SurfaceModel.hirzebruch(m)
    surface.check(v.ch1)
    chi = euler_char(v, surface)
    nu_f, nu_m = _nu_pairings(v, surface)

    if nu_f == -1:
        table = BettiTable(Fraction(0), -chi, Fraction(0), "nu.F = -1")
    elif nu_f > -1 and nu_m >= -1:
        table = _single_group(chi, "single group")
    elif nu_f > -1:
        table = _peel(v, surface, chi, max_peel)
    elif v.ch0 >= 2:
        dual = ChernCharacter(v.ch0, -v.ch1, v.ch2)
        table = ch_betti_hirzebruch(tensor_line(dual, surface.canonical_class, surface), m, max_peel)
        table = table.reversed(f"serre duality, then {table.branch}")
    else:
        table = BettiTable(Fraction(0), None, None, "rank 1, nu.F < -1")

    logger.info(messages.CohomologyMessages.branch.format(branch=table.branch, peels=table.peel_count, character=v))
    return table


def _peel(v: ChernCharacter, surface: SurfaceModel, chi: Fraction, max_peel: int) -> BettiTable:
    minus_m = surface.divisor(-1, 0)
    current, steps = v, 0
    _, nu_m = _nu_pairings(current, surface)
    while nu_m < -1:
        if steps >= max_peel:
            raise NonTermination(messages.CohomologyMessages.non_termination.format(limit=max_peel))
        current = tensor_line(current, minus_m, surface)
        steps += 1
        _, nu_m = _nu_pairings(current, surface)
        logger.debug(messages.CohomologyMessages.peel.format(step=steps, nu_m=nu_m))
    h0 = _h0_without_peel(current, surface)
    h1 = h0 - chi
    if h1 < 0:
        logger.warning(messages.CohomologyMessages.inconsistent.format(
            case="peel", detail=f"h0 = {h0} is below chi = {chi}"))
        return BettiTable(h0, None, Fraction(0), "peel", steps)
    return BettiTable(h0, h1, Fraction(0), "peel", steps)


def betti_table(v: ChernCharacter, surface: SurfaceModel, max_peel: int = MAX_PEEL) -> BettiTable:
    if surface.kind is SurfaceKind.PROJECTIVE_PLANE:
        return gh_betti_p2(v)
    if surface.kind is SurfaceKind.HIRZEBRUCH:
        return ch_betti_hirzebruch(v, surface.m, max_peel)
    raise UnsupportedSurface(messages.LatticeMessages.wrong_surface.format(
        operation="Betti tables", expected="P2 or a Hirzebruch surface"))


@dataclass(frozen=True)
class RestrictedBetti:
    """h⁰ and h¹ of E|_C with the tables that produced them."""

    h0: Fraction
    h1: Fraction
    case: Tuple[Optional[int], Optional[int]]
    betti_e: BettiTable
    betti_twisted: BettiTable

    @property
    def euler(self) -> Fraction:
        return self.h0 - self.h1

    @property
    def case_label(self) -> str:
        return "(" + ",".join("-" if i is None else str(i) for i in self.case) + ")"


def restricted_betti(
    surface: SurfaceModel,
    v: ChernCharacter,
    C: DivisorClass,
    ctx: TwistContext,
    depth: int = DEFAULT_DEPTH,
    max_peel: int = MAX_PEEL,
) -> RestrictedBetti:
    """
    Chase 0 → E(−C) → E → E|_C → 0 with a = E(−C), b = E:

        h⁰(E|_C) = b0 − a0 + a1 − rank f
        h¹(E|_C) = b1 − rank f + a2 − b2

    where f: H¹(a) → H¹(b). rank f is forced to 0 when either side vanishes;
    otherwise the case is undetermined and the possible ranges are reported.
    """
    hc = intersect(surface, ctx.H, C)
    if hc <= 0:
        raise NonPositiveHC(messages.WallMessages.non_positive_hc.format(value=hc))
    if surface.kind is SurfaceKind.PROJECTIVE_PLANE:
        moduli_dimension_p2(v, depth)
    b = betti_table(v, surface, max_peel)
    a = betti_table(tensor_line(v, -C, surface), surface, max_peel)
    case = (b.nonzero_index(), a.nonzero_index())
    label = "(" + ",".join("-" if i is None else str(i) for i in case) + ")"

    if not (a.determined and b.determined):
        logger.info(messages.CohomologyMessages.undetermined.format(case=label))
        raise UndeterminedCase(messages.CohomologyMessages.undetermined.format(case=label), case)
    if a.h0 > b.h0 or a.h2 < b.h2:
        detail = f"E(-C) {a.as_tuple()} against E {b.as_tuple()}"
        raise UndeterminedCase(messages.CohomologyMessages.inconsistent.format(case=label, detail=detail), case)

    base_h0 = b.h0 - a.h0 + a.h1
    base_h1 = b.h1 + a.h2 - b.h2
    if a.h1 and b.h1:
        top = min(a.h1, b.h1)
        logger.info(messages.CohomologyMessages.undetermined.format(case=label))
        raise UndeterminedCase(
            messages.CohomologyMessages.undetermined.format(case=label),
            case,
            h0_range=(base_h0 - top, base_h0),
            h1_range=(base_h1 - top, base_h1),
        )
    return RestrictedBetti(base_h0, base_h1, case, b, a)


def restricted_closed_form_p2(v: ChernCharacter, d: int) -> Tuple[Fraction, Fraction]:
    """
    h⁰(E|_C) = r + 3e/2 + ch₂ and
    h¹(E|_C) = r + (3/2)(e − dr) + ch₂ − de + rd²/2
    for C of degree d, valid when H⁰(E) ≠ 0 and H²(E(−C)) ≠ 0.
    """
    p2 = SurfaceModel.projective_plane()
    require_sheaf_like(v, p2)
    twisted = tensor_line(v, p2.divisor(-d), p2)
    if not gh_betti_p2(v).h0:
        raise HypothesisFailed(messages.CohomologyMessages.hypothesis_failed.format(hypothesis="H^0(E) != 0"))
    if not gh_betti_p2(twisted).h2:
        raise HypothesisFailed(messages.CohomologyMessages.hypothesis_failed.format(hypothesis="H^2(E(-C)) != 0"))
    return closed_form_values(v, d)


def closed_form_values(v: ChernCharacter, d: int) -> Tuple[Fraction, Fraction]:
    """Both closed-form expressions, without the hypothesis gate."""
    r, e, ch2 = v.ch0, v.ch1.coefficients[0], v.ch2
    h0 = r + Fraction(3, 2) * e + ch2
    h1 = r + Fraction(3, 2) * (e - d * r) + ch2 - d * e + Fraction(r * d * d, 2)
    return h0, h1
