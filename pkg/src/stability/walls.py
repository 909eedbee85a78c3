"""
Module: walls.py
Part of the Restriction Stability Toolkit.

Geometry of the (s, t) upper half-plane of Bridgeland stability conditions
σ_{s,t} = (Z_{s,t}, A_s) attached to a polarization H and twist D.

Public API:
    Wall, WallKind, StabilityPoint
    central_charge()            -- (Re, Im) of Z_{s,t}.
    bridgeland_slope()          -- μ_{s,t} of a positive- or negative-rank class.
    bridgeland_slope_at()       -- same display with t² given directly.
    bridgeland_slope_rank0()    -- slope of a rank-0 class (independent of t).
    wall()                      -- numerical wall between two classes.
    restriction_wall()          -- W(E, E(−C)[1]).
    restriction_wall_forms()    -- generic wall plus both closed-form centers.
    category_window()           -- s-range where E and E(−C)[1] lie in A_s.
    gieseker_bound_wall()       -- the wall bounding every subsheaf wall.
    is_outside()                -- nesting comparison by exact squared feet.

Walls store radius², never radius, so every comparison here is a rational
sign test.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from src.lattice.chern import (
    ChernCharacter,
    TwistContext,
    discriminant,
    shift,
    slope,
    tensor_line,
    twist,
)
from src.lattice.surface import DivisorClass, SurfaceModel, intersect
from src.utils import messages
from src.utils.errors import (
    DegenerateWall,
    NonPositiveHC,
    RankTooSmall,
    RankZero,
    SlopeEqualsS,
    ZeroImaginaryPart,
)

logger = logging.getLogger(__name__)


class WallKind(str, Enum):
    SEMICIRCLE = "semicircle"
    EMPTY = "empty"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class Wall:
    """Semicircle with rational center on the s-axis and rational radius²."""

    center_s: Fraction
    radius_sq: Fraction
    kind: WallKind

    @classmethod
    def from_center(cls, center_s: Fraction, radius_sq: Fraction) -> "Wall":
        kind = WallKind.SEMICIRCLE if radius_sq > 0 else WallKind.EMPTY
        return cls(Fraction(center_s), Fraction(radius_sq), kind)

    @property
    def is_semicircle(self) -> bool:
        return self.kind is WallKind.SEMICIRCLE

    def contains_s(self, s: Fraction) -> bool:
        """True when the vertical line through ``s`` meets the open semicircle."""
        return self.is_semicircle and (s - self.center_s) ** 2 < self.radius_sq

    def t_squared_at(self, s: Fraction) -> Fraction:
        """t² of the wall point above ``s``."""
        return self.radius_sq - (s - self.center_s) ** 2

    def to_dict(self) -> dict:
        return {"center": str(self.center_s), "radius_sq": str(self.radius_sq), "kind": self.kind.value}


@dataclass(frozen=True)
class StabilityPoint:
    s: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise ValueError(f"t must be positive, got {self.t}")


def _shifted_context(ctx: TwistContext, s: Fraction) -> DivisorClass:
    return ctx.D + ctx.H * s


def central_charge(
    v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel, p: StabilityPoint
) -> Tuple[Fraction, Fraction]:
    """Z_{s,t} = −ch2^{D+sH} + (t²H²/2)·ch0 + i·H·ch1^{D+sH}."""
    shifted = twist(v, _shifted_context(ctx, p.s), surface)
    h_squared = intersect(surface, ctx.H, ctx.H)
    real = -shifted.ch2 + p.t * p.t * h_squared / 2 * shifted.ch0
    imaginary = intersect(surface, ctx.H, shifted.ch1)
    return real, imaginary


def bridgeland_slope_at(
    v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel, s: Fraction, t_sq: Fraction
) -> Fraction:
    """((μ − s)² − t² − 2Δ)/(μ − s) with t² supplied directly."""
    if v.ch0 == 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity="Bridgeland slope"))
    mu = slope(v, ctx, surface)
    delta = discriminant(v, ctx, surface)
    offset = mu - Fraction(s)
    if offset == 0:
        raise SlopeEqualsS(messages.WallMessages.slope_equals_s.format(s=s))
    return (offset * offset - Fraction(t_sq) - 2 * delta) / offset


def bridgeland_slope(
    v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel, p: StabilityPoint
) -> Fraction:
    return bridgeland_slope_at(v, ctx, surface, p.s, p.t * p.t)


def bridgeland_slope_rank0(
    v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel, s: Fraction
) -> Fraction:
    """(ch2 − (D + sH)·ch1)/(H·ch1) for a rank-0 class."""
    if v.ch0 != 0:
        raise ValueError("bridgeland_slope_rank0 expects a rank-0 class")
    denominator = intersect(surface, ctx.H, v.ch1)
    if denominator == 0:
        raise ZeroImaginaryPart(messages.WallMessages.zero_imaginary)
    return (v.ch2 - intersect(surface, _shifted_context(ctx, Fraction(s)), v.ch1)) / denominator


def wall(v: ChernCharacter, w: ChernCharacter, ctx: TwistContext, surface: SurfaceModel) -> Wall:
    """Numerical wall W(v, w): equal Bridgeland slopes."""
    mu_v, mu_w = slope(v, ctx, surface), slope(w, ctx, surface)
    delta_v, delta_w = discriminant(v, ctx, surface), discriminant(w, ctx, surface)
    if mu_v == mu_w:
        return Wall(mu_v, Fraction(0), WallKind.VERTICAL)
    center = (mu_v + mu_w) / 2 - (delta_v - delta_w) / (mu_v - mu_w)
    return Wall.from_center(center, (mu_v - center) ** 2 - 2 * delta_v)


def _require_positive_rank(v: ChernCharacter, operation: str) -> None:
    if v.ch0 == 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity=operation))
    if v.ch0 < 0:
        raise RankTooSmall(messages.WallMessages.rank_too_small.format(operation=operation, minimum=1, rank=v.ch0))


def _curve_degree(C: DivisorClass, ctx: TwistContext, surface: SurfaceModel) -> Fraction:
    hc = intersect(surface, ctx.H, C)
    if hc <= 0:
        raise NonPositiveHC(messages.WallMessages.non_positive_hc.format(value=hc))
    return hc


def restriction_wall(v: ChernCharacter, C: DivisorClass, ctx: TwistContext, surface: SurfaceModel) -> Wall:
    """W(E, E(−C)[1]) computed as the generic wall of the two classes."""
    _require_positive_rank(v, "restriction wall")
    _curve_degree(C, ctx, surface)
    return wall(v, shift(tensor_line(v, -C, surface)), ctx, surface)


def theorem_form_center(v: ChernCharacter, C: DivisorClass, ctx: TwistContext, surface: SurfaceModel) -> Fraction:
    """C·ch1^D/(ch0·H·C) − C²/(2H·C): the center used by the general-surface criterion."""
    _require_positive_rank(v, "restriction wall")
    hc = _curve_degree(C, ctx, surface)
    twisted = twist(v, ctx.D, surface)
    return intersect(surface, C, twisted.ch1) / (v.ch0 * hc) - intersect(surface, C, C) / (2 * hc)


@dataclass(frozen=True)
class RestrictionWallForms:
    wall: Wall
    preliminaries_center: Fraction
    theorem_center: Fraction

    @property
    def agree(self) -> bool:
        return self.wall.center_s == self.preliminaries_center


def restriction_wall_forms(
    v: ChernCharacter, C: DivisorClass, ctx: TwistContext, surface: SurfaceModel
) -> RestrictionWallForms:
    """
    The restriction wall with its two closed-form centers.

    The theorem form always equals the generic center; μ − C·H/(2H²) only
    does when C is proportional to H. Disagreement is logged, not resolved.
    """
    generic = restriction_wall(v, C, ctx, surface)
    h_squared = intersect(surface, ctx.H, ctx.H)
    preliminaries = slope(v, ctx, surface) - intersect(surface, C, ctx.H) / (2 * h_squared)
    forms = RestrictionWallForms(generic, preliminaries, theorem_form_center(v, C, ctx, surface))
    if not forms.agree:
        logger.warning(
            messages.WallMessages.closed_forms_disagree.format(
                curve=C, generic=generic.center_s, preliminaries=forms.preliminaries_center)
        )
    return forms


def category_window(
    v: ChernCharacter, C: DivisorClass, ctx: TwistContext, surface: SurfaceModel
) -> Tuple[Fraction, Fraction]:
    """Half-open [μ − C·H/H², μ) of s-values where E and E(−C)[1] lie in A_s."""
    _require_positive_rank(v, "category window")
    mu = slope(v, ctx, surface)
    return mu - intersect(surface, C, ctx.H) / intersect(surface, ctx.H, ctx.H), mu


def gieseker_bound_wall(v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel) -> Wall:
    """Wall with center μ − 1/(2r(r−1)H²) − r(r−1)H²Δ_{H,D}."""
    r = v.ch0
    if r < 2:
        raise RankTooSmall(
            messages.WallMessages.rank_too_small.format(operation="Gieseker bound wall", minimum=2, rank=r)
        )
    h_squared = intersect(surface, ctx.H, ctx.H)
    mu = slope(v, ctx, surface)
    delta = discriminant(v, ctx, surface)
    center = mu - Fraction(1, 2 * r * (r - 1)) / h_squared - r * (r - 1) * h_squared * delta
    return Wall.from_center(center, (mu - center) ** 2 - 2 * delta)


def is_outside(w1: Wall, w2: Wall) -> bool:
    """
    True iff center(w1) ≤ center(w2) and w1's left foot is strictly left of w2's.

    With k = c2 − c1 ≥ 0 the foot test c1 − √a1 < c2 − √a2 reads
    √a1 + k > √a2, decided by squaring twice with sign bookkeeping.
    """
    if not (w1.is_semicircle and w2.is_semicircle):
        raise DegenerateWall(messages.WallMessages.degenerate.format(first=w1.kind.value, second=w2.kind.value))
    k = w2.center_s - w1.center_s
    if k < 0:
        return False
    rest = w2.radius_sq - w1.radius_sq - k * k
    if rest < 0:
        return True
    if k == 0:
        return False
    return 4 * k * k * w1.radius_sq > rest * rest
