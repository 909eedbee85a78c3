"""
Module: chern.py
Part of the Restriction Stability Toolkit.

Chern-character arithmetic on a fixed Picard lattice.

Public API:
    ChernCharacter          -- (ch0, ch1, ch2) with integer rank.
    TwistContext            -- polarization H and rational twist D.
    twist(), tensor_line(), shift()
    slope(), discriminant(), classical_discriminant(), minimizing_twist()
    pushforward()
    hilbert_polynomial(), euler_char(), euler_char_p2(), euler_pairing_p2()
    bogomolov_ok(), is_sheaf_like(), require_sheaf_like()

Design:
    Everything is ``fractions.Fraction``; no float appears in this module.
    Slope-type quantities reject rank 0 with ``RankZero``; rank-0 classes get
    their own slope in ``src.stability.walls``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from src.lattice.surface import DivisorClass, SurfaceKind, SurfaceModel, intersect
from src.utils import messages
from src.utils.errors import NonPositiveH, NotSheafLike, RankZero, WrongSurface

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class ChernCharacter:
    """Numerical K-class. ``ch0`` may be negative for shifted objects."""

    ch0: int
    ch1: DivisorClass
    ch2: Fraction

    def __post_init__(self) -> None:
        rank = Fraction(self.ch0)
        if rank.denominator != 1:
            raise ValueError(f"ch0 must be an integer, got {self.ch0}")
        object.__setattr__(self, "ch0", int(rank))
        object.__setattr__(self, "ch2", Fraction(self.ch2))

    @classmethod
    def of(cls, ch0: int, ch1: "tuple | list | DivisorClass", ch2: Number) -> "ChernCharacter":
        if not isinstance(ch1, DivisorClass):
            ch1 = DivisorClass(tuple(ch1))
        return cls(ch0, ch1, Fraction(ch2))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.ch0, -self.ch1, -self.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return self + (-other)

    def to_dict(self) -> dict:
        return {"ch0": self.ch0, "ch1": self.ch1.to_strings(), "ch2": str(self.ch2)}

    def __str__(self) -> str:
        return f"({self.ch0}, {self.ch1}, {self.ch2})"


@dataclass(frozen=True)
class TwistContext:
    """Polarization ``H`` (ample, user-asserted) and twist ``D``."""

    H: DivisorClass
    D: DivisorClass

    @classmethod
    def build(cls, surface: SurfaceModel, H: DivisorClass, D: Optional[DivisorClass] = None) -> "TwistContext":
        surface.check(H)
        if D is None:
            D = surface.zero()
        surface.check(D)
        h_squared = intersect(surface, H, H)
        if h_squared <= 0:
            raise NonPositiveH(messages.LatticeMessages.non_positive_h.format(value=h_squared))
        return cls(H, D)

    @classmethod
    def untwisted(cls, surface: SurfaceModel, H: Optional[DivisorClass] = None) -> "TwistContext":
        """``D = 0``; on P² the polarization defaults to the line class."""
        if H is None:
            if surface.kind is not SurfaceKind.PROJECTIVE_PLANE:
                raise ValueError(f"a polarization is required on {surface.label}")
            H = surface.divisor(1)
        return cls.build(surface, H)

    def with_twist(self, D: DivisorClass) -> "TwistContext":
        return TwistContext(self.H, D)


def twist(v: ChernCharacter, D: DivisorClass, surface: SurfaceModel) -> ChernCharacter:
    """ch^D = ch · exp(-D)."""
    surface.check(v.ch1, D)
    ch1 = v.ch1 - D * v.ch0
    ch2 = v.ch2 - intersect(surface, D, v.ch1) + intersect(surface, D, D) / 2 * v.ch0
    return ChernCharacter(v.ch0, ch1, ch2)


def tensor_line(v: ChernCharacter, L: DivisorClass, surface: SurfaceModel) -> ChernCharacter:
    """ch(E ⊗ O(L)); the same as twisting by -L."""
    return twist(v, -L, surface)


def shift(v: ChernCharacter) -> ChernCharacter:
    return -v


def _require_rank(v: ChernCharacter, quantity: str) -> None:
    if v.ch0 == 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity=quantity))


def degree(v: ChernCharacter, H: DivisorClass, surface: SurfaceModel) -> Fraction:
    """H·ch1."""
    return intersect(surface, H, v.ch1)


def slope(v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel) -> Fraction:
    """μ_{H,D} = H·ch1^D / (H² ch0)."""
    _require_rank(v, "slope")
    twisted = twist(v, ctx.D, surface)
    return intersect(surface, ctx.H, twisted.ch1) / (intersect(surface, ctx.H, ctx.H) * v.ch0)


def discriminant(v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel) -> Fraction:
    """Δ_{H,D} = ½μ² − ch2^D / (H² ch0)."""
    _require_rank(v, "discriminant")
    twisted = twist(v, ctx.D, surface)
    mu = intersect(surface, ctx.H, twisted.ch1) / (intersect(surface, ctx.H, ctx.H) * v.ch0)
    return mu * mu / 2 - twisted.ch2 / (intersect(surface, ctx.H, ctx.H) * v.ch0)


def classical_discriminant(v: ChernCharacter, surface: SurfaceModel) -> Fraction:
    """Δ = ½ c1²/r² − ch2/r."""
    _require_rank(v, "classical discriminant")
    surface.check(v.ch1)
    return intersect(surface, v.ch1, v.ch1) / (2 * v.ch0 * v.ch0) - v.ch2 / v.ch0


def minimizing_twist(v: ChernCharacter, H: DivisorClass, surface: SurfaceModel) -> DivisorClass:
    """
    Twist D with H²·Δ_{H,D}(v) = Δ(v).

    Writes ch1 = eH + ε with H·ε = 0 and returns ε / ch0. For any other D the
    difference H²Δ_{H,D} − Δ is nonnegative by the Hodge index theorem.
    """
    _require_rank(v, "minimizing twist")
    surface.check(v.ch1, H)
    h_squared = intersect(surface, H, H)
    if h_squared <= 0:
        raise NonPositiveH(messages.LatticeMessages.non_positive_h.format(value=h_squared))
    e = intersect(surface, H, v.ch1) / h_squared
    epsilon = v.ch1 - H * e
    return epsilon / v.ch0


def pushforward(C: DivisorClass, r: int, e: Number, surface: SurfaceModel) -> ChernCharacter:
    """ch(i_* F) for a rank ``r``, degree ``e`` bundle F on a curve of class C."""
    surface.check(C)
    return ChernCharacter(0, C * r, Fraction(e) - r * intersect(surface, C, C) / 2)


def hilbert_polynomial(x: Number) -> Fraction:
    """P(x) = ½(x² + 3x + 2), the Hilbert polynomial of O_{P²}."""
    x = Fraction(x)
    return (x * x + 3 * x + 2) / 2


def euler_char(v: ChernCharacter, surface: SurfaceModel) -> Fraction:
    """Riemann-Roch on a surface: χ = ch2 − ½K·ch1 + ch0·χ(O_X)."""
    surface.check(v.ch1)
    return v.ch2 - intersect(surface, surface.canonical_class, v.ch1) / 2 + v.ch0 * surface.chi_structure_sheaf


def _require_p2(v: ChernCharacter, surface: Optional[SurfaceModel], operation: str) -> None:
    if surface is not None and surface.kind is not SurfaceKind.PROJECTIVE_PLANE:
        raise WrongSurface(messages.LatticeMessages.wrong_surface.format(operation=operation, expected="P2"))
    if v.ch1.rank != 1:
        raise WrongSurface(messages.LatticeMessages.wrong_surface.format(operation=operation, expected="P2"))


def euler_char_p2(v: ChernCharacter, surface: Optional[SurfaceModel] = None) -> Fraction:
    """χ = r + (3/2)·deg(c1) + ch2 on P²."""
    _require_p2(v, surface, "euler_char_p2")
    return v.ch0 + Fraction(3, 2) * v.ch1.coefficients[0] + v.ch2


def p2_slope(v: ChernCharacter) -> Fraction:
    """Untwisted slope on P²: deg(c1)/r."""
    _require_p2(v, None, "p2_slope")
    _require_rank(v, "slope")
    return v.ch1.coefficients[0] / v.ch0


def p2_discriminant(v: ChernCharacter) -> Fraction:
    """Untwisted discriminant on P²: ½μ² − ch2/r."""
    mu = p2_slope(v)
    return mu * mu / 2 - v.ch2 / v.ch0


def euler_pairing_p2(v: ChernCharacter, w: ChernCharacter) -> Fraction:
    """χ(v, w) = r_v r_w (P(μ_w − μ_v) − Δ_v − Δ_w)."""
    mu_v, mu_w = p2_slope(v), p2_slope(w)
    return v.ch0 * w.ch0 * (hilbert_polynomial(mu_w - mu_v) - p2_discriminant(v) - p2_discriminant(w))


def bogomolov_ok(v: ChernCharacter, ctx: TwistContext, surface: SurfaceModel) -> bool:
    """True iff Δ_{H,D} ≥ 0."""
    if v.ch0 <= 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity="Bogomolov check"))
    return discriminant(v, ctx, surface) >= 0


def sheaf_like_failure(v: ChernCharacter, surface: SurfaceModel) -> Optional[str]:
    """Reason ``v`` fails the integrality gate, or ``None``."""
    if not v.ch1.is_integral():
        return "ch1 is not integral"
    chi = euler_char(v, surface)
    if chi.denominator != 1:
        return f"chi = {chi} is not an integer"
    return None


def is_sheaf_like(v: ChernCharacter, surface: SurfaceModel) -> bool:
    return sheaf_like_failure(v, surface) is None


def require_sheaf_like(v: ChernCharacter, surface: SurfaceModel) -> None:
    reason = sheaf_like_failure(v, surface)
    if reason is not None:
        message = messages.LatticeMessages.not_sheaf_like.format(character=v, reason=reason)
        logger.warning(message)
        raise NotSheafLike(message)
