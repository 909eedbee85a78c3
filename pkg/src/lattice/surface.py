"""
Module: surface.py
Part of the Restriction Stability Toolkit.

Numerical model of a smooth polarized surface: Picard lattice, intersection
pairing, canonical class, ampleness tests and curve genera.

Public API:
    DivisorClass      -- rational coefficient vector in the lattice basis.
    SurfaceKind       -- projective plane, Hirzebruch surface, or custom lattice.
    SurfaceModel      -- lattice data; builders ``projective_plane()``,
                         ``hirzebruch(m)`` and ``custom(...)``.
    intersect()       -- the intersection form.
    is_ample()        -- ampleness on the builtin surfaces.
    genus_of_curve()  -- arithmetic genus by adjunction.

Conventions:
    P² has basis (H,) with H² = 1 and K = -3H.
    F_m has basis (M, F) with M² = -m, M·F = 1, F² = 0 and
    K = -2M - (m+2)F. The Hirzebruch parameter is always called ``m``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from src.utils import messages
from src.utils.errors import DimensionMismatch, UnsupportedSurface, ValidationError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class DivisorClass:
    """A Q-divisor class written in the lattice basis of its surface."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def of(cls, *coefficients: Number) -> "DivisorClass":
        return cls(tuple(coefficients))

    @classmethod
    def zero(cls, rank: int) -> "DivisorClass":
        return cls((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def _check(self, other: "DivisorClass") -> None:
        if self.rank != other.rank:
            raise DimensionMismatch(
                messages.LatticeMessages.dimension_mismatch.format(got=other.rank, expected=self.rank)
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coefficients))

    def __mul__(self, scalar: Number) -> "DivisorClass":
        if isinstance(scalar, DivisorClass):
            return NotImplemented
        factor = Fraction(scalar)
        return DivisorClass(tuple(factor * a for a in self.coefficients))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> "DivisorClass":
        factor = Fraction(scalar)
        return DivisorClass(tuple(a / factor for a in self.coefficients))

    def proportional_factor(self, other: "DivisorClass") -> Optional[Fraction]:
        """Return ``k`` with ``self == k * other``, or ``None`` when not proportional."""
        self._check(other)
        factor: Optional[Fraction] = None
        for mine, theirs in zip(self.coefficients, other.coefficients):
            if theirs == 0:
                if mine != 0:
                    return None
                continue
            ratio = mine / theirs
            if factor is None:
                factor = ratio
            elif factor != ratio:
                return None
        return factor if factor is not None else (Fraction(0) if self.is_zero() else None)

    def to_strings(self) -> list:
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coefficients) + ")"


class SurfaceKind(str, Enum):
    PROJECTIVE_PLANE = "p2"
    HIRZEBRUCH = "hirzebruch"
    CUSTOM = "custom"


@dataclass(frozen=True)
class SurfaceModel:
    """Picard lattice with intersection form, canonical class and χ(O_X)."""

    kind: SurfaceKind
    intersection_matrix: Tuple[Tuple[int, ...], ...]
    canonical_class: DivisorClass
    chi_structure_sheaf: int
    m: Optional[int] = None

    def __post_init__(self) -> None:
        matrix = tuple(tuple(int(x) for x in row) for row in self.intersection_matrix)
        object.__setattr__(self, "intersection_matrix", matrix)
        size = len(matrix)
        if size == 0 or any(len(row) != size for row in matrix):
            raise ValidationError(messages.LatticeMessages.not_symmetric.format(matrix=matrix))
        if any(matrix[i][j] != matrix[j][i] for i in range(size) for j in range(size)):
            raise ValidationError(messages.LatticeMessages.not_symmetric.format(matrix=matrix))
        if self.canonical_class.rank != size:
            raise DimensionMismatch(
                messages.LatticeMessages.dimension_mismatch.format(
                    got=self.canonical_class.rank, expected=size)
            )

    # -- builders ----------------------------------------------------------

    @classmethod
    def projective_plane(cls) -> "SurfaceModel":
        return cls(
            kind=SurfaceKind.PROJECTIVE_PLANE,
            intersection_matrix=((1,),),
            canonical_class=DivisorClass.of(-3),
            chi_structure_sheaf=1,
        )

    @classmethod
    def hirzebruch(cls, m: int) -> "SurfaceModel":
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise ValidationError(messages.LatticeMessages.bad_hirzebruch.format(m=m))
        return cls(
            kind=SurfaceKind.HIRZEBRUCH,
            intersection_matrix=((-m, 1), (1, 0)),
            canonical_class=DivisorClass.of(-2, -(m + 2)),
            chi_structure_sheaf=1,
            m=m,
        )

    @classmethod
    def custom(
        cls,
        matrix: Sequence[Sequence[int]],
        canonical: Iterable[Number],
        chi_structure_sheaf: int,
    ) -> "SurfaceModel":
        return cls(
            kind=SurfaceKind.CUSTOM,
            intersection_matrix=tuple(tuple(row) for row in matrix),
            canonical_class=DivisorClass(tuple(canonical)),
            chi_structure_sheaf=chi_structure_sheaf,
        )

    # -- conveniences ------------------------------------------------------

    @property
    def picard_rank(self) -> int:
        return len(self.intersection_matrix)

    @property
    def label(self) -> str:
        if self.kind is SurfaceKind.PROJECTIVE_PLANE:
            return "P2"
        if self.kind is SurfaceKind.HIRZEBRUCH:
            return f"F_{self.m}"
        return f"custom(rank {self.picard_rank})"

    def divisor(self, *coefficients: Number) -> DivisorClass:
        """Build a class on this surface, checking the coefficient count."""
        value = DivisorClass(tuple(coefficients))
        self.check(value)
        return value

    def zero(self) -> DivisorClass:
        return DivisorClass.zero(self.picard_rank)

    def check(self, *classes: DivisorClass) -> None:
        for value in classes:
            if value.rank != self.picard_rank:
                raise DimensionMismatch(
                    messages.LatticeMessages.dimension_mismatch.format(
                        got=value.rank, expected=self.picard_rank)
                )

    def to_dict(self) -> dict:
        if self.kind is SurfaceKind.PROJECTIVE_PLANE:
            return {"kind": "p2"}
        if self.kind is SurfaceKind.HIRZEBRUCH:
            return {"kind": "hirzebruch", "m": self.m}
        return {
            "kind": "custom",
            "matrix": [list(row) for row in self.intersection_matrix],
            "canonical": self.canonical_class.to_strings(),
            "chiO": self.chi_structure_sheaf,
        }


def intersect(surface: SurfaceModel, a: DivisorClass, b: DivisorClass) -> Fraction:
    """Return aᵀ · Q · b for the surface's intersection matrix Q."""
    surface.check(a, b)
    total = Fraction(0)
    for i, row in enumerate(surface.intersection_matrix):
        if a.coefficients[i] == 0:
            continue
        for j, entry in enumerate(row):
            if entry:
                total += a.coefficients[i] * entry * b.coefficients[j]
    return total


def is_ample(surface: SurfaceModel, c: DivisorClass) -> bool:
    """Ampleness on P² (positive multiple of H) and F_m (a > 0 and b > am)."""
    surface.check(c)
    if surface.kind is SurfaceKind.PROJECTIVE_PLANE:
        return c.coefficients[0] > 0
    if surface.kind is SurfaceKind.HIRZEBRUCH:
        a, b = c.coefficients
        return a > 0 and b > a * surface.m
    raise UnsupportedSurface(messages.LatticeMessages.custom_no_ampleness)


def genus_of_curve(surface: SurfaceModel, c: DivisorClass) -> Fraction:
    """Arithmetic genus 1 + (C² + K·C)/2."""
    return 1 + (intersect(surface, c, c) + intersect(surface, surface.canonical_class, c)) / 2
