"""
errors.py

Typed exceptions raised by the restriction-stability library.

Every failure the library can report has its own subclass of
``RestrictionError`` so callers (and the CLI exit-code mapping) can tell a
malformed document from a degenerate numerical input or from a long exact
sequence that the numbers alone cannot resolve.

Hierarchy
---------
RestrictionError
    ValidationError        -- bad document text, unknown keys, bad rationals
        NotSheafLike       -- integrality gate on a character
    DimensionMismatch, UnsupportedSurface, WrongSurface, NotAmple
    RankZero, RankTooSmall, NonPositiveH, NonPositiveHC, BadDegree
    SlopeEqualsS, ZeroImaginaryPart, DegenerateWall
    NotPicardRankTwo, BelowDLPCurve, NegativeDiscriminant, NoRealRoot
    BadDyadic, DepthExceeded, SingularCase, NonTermination
    HypothesisFailed       -- carries the diagnostic report
    UndeterminedCase       -- carries the (i, j) case index and ranges

Part of the Restriction Stability Toolkit.
"""

from __future__ import annotations

from typing import Any, Optional, Tuple


class RestrictionError(Exception):
    """Base class for every error raised by the library."""


class ValidationError(RestrictionError):
    """Input text or document structure is invalid."""


class NotSheafLike(ValidationError):
    """A character fails the integrality gate (ch0, ch1 integral and chi integral)."""


class DimensionMismatch(RestrictionError):
    """A divisor class length does not match the surface's Picard rank."""


class UnsupportedSurface(RestrictionError):
    """The operation has no oracle for this kind of surface."""


class WrongSurface(RestrictionError):
    """The operation is only defined on a specific surface."""


class NotAmple(RestrictionError):
    """The polarization fails the ampleness test."""


class RankZero(RestrictionError):
    """Slope-type quantities are undefined for rank zero."""


class RankTooSmall(RestrictionError):
    """The statement needs a larger rank."""


class NonPositiveH(RestrictionError):
    """H·H must be positive."""


class NonPositiveHC(RestrictionError):
    """H·C must be positive."""


class BadDegree(RestrictionError):
    """Curve degrees start at 1."""


class SlopeEqualsS(RestrictionError):
    """Bridgeland slope evaluated on the vertical line mu = s."""


class ZeroImaginaryPart(RestrictionError):
    """Rank-zero slope with H·ch1 = 0."""


class DegenerateWall(RestrictionError):
    """Nesting comparisons need two semicircular walls."""


class NotPicardRankTwo(RestrictionError):
    """The moduli space is not known to have Picard rank 2 (Delta <= delta(mu))."""


class BelowDLPCurve(RestrictionError):
    """Delta lies below the Drezet-Le Potier curve, so M(v) is empty."""


class NegativeDiscriminant(RestrictionError):
    """The bound needs Delta >= 0."""


class NoRealRoot(RestrictionError):
    """The associated quadratic has no real intersection with Delta = 1/2."""


class BadDyadic(RestrictionError):
    """Dyadic address p/2^q is not in lowest terms."""


class DepthExceeded(RestrictionError):
    """No generated interval contains the value within the depth bound."""


class SingularCase(RestrictionError):
    """A closed form for the orthogonal invariants divides by zero."""


class NonTermination(RestrictionError):
    """An iterative reduction exceeded its step guard."""


class HypothesisFailed(RestrictionError):
    """A statement's hypotheses do not hold; ``report`` holds the diagnostic values."""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class UndeterminedCase(RestrictionError):
    """The restriction sequence leaves a connecting map of unknown rank."""

    def __init__(
        self,
        message: str,
        case: Tuple[Optional[int], Optional[int]],
        h0_range: Optional[Tuple[Any, Any]] = None,
        h1_range: Optional[Tuple[Any, Any]] = None,
    ):
        super().__init__(message)
        self.case = case
        self.h0_range = h0_range
        self.h1_range = h1_range

    @property
    def case_label(self) -> str:
        i, j = self.case
        return f"({'-' if i is None else i},{'-' if j is None else j})"
