"""
Module: exceptional.py
Part of the Restriction Stability Toolkit.

Exceptional bundles on P² and the invariants built from them: intervals
I_α, the Drézet-Le Potier curve δ(μ), the corresponding exceptional
character of a Chern character, its orthogonal invariants (μ⁺, Δ⁺) and the
center of the effective wall.

Generation
----------
Exceptional slopes are indexed by dyadic rationals: ε(n) = n for integers,
and for odd p at level q ≥ 1

    ε(p/2^q) = ε((p−1)/2^q) ⋆ ε((p+1)/2^q),
    α ⋆ β    = (α + β)/2 + (Δ_β − Δ_α)/(3 + α − β),

where the neighbours are reduced to lowest terms first. The rank of E_α is
the denominator of α and Δ_α = ½(1 − 1/r²). ``_slope`` is memoized with
``functools.lru_cache``.

Public API:
    ExceptionalSlope, OrthogonalInvariants
    exceptional_from_dyadic(), enumerate_exceptional()
    x_alpha(), interval(), in_interval(), find_interval()
    mu0(), dlp_delta(), has_picard_rank_two(), moduli_dimension_p2()
    corresponding_exceptional(), orthogonal_invariants(), effective_wall_center()
    mu_plus_bound(), mu_plus_bound_holds()
    mu_plus_lemma_bound(), mu_plus_lemma_holds()
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

import sympy

from src.lattice.chern import (
    ChernCharacter,
    euler_pairing_p2,
    hilbert_polynomial,
    p2_discriminant,
    p2_slope,
)
from src.lattice.surface import DivisorClass
from src.p2.quadratic import QuadraticNumber
from src.utils import messages
from src.utils.errors import (
    BadDyadic,
    BelowDLPCurve,
    DepthExceeded,
    NegativeDiscriminant,
    NoRealRoot,
    RankZero,
    SingularCase,
)

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 12
MAX_DEPTH = 16

Number = Union[int, Fraction]


@dataclass(frozen=True)
class ExceptionalSlope:
    """Slope, rank and discriminant of E_α with its dyadic address p/2^q."""

    alpha: Fraction
    rank: int
    discriminant: Fraction
    dyadic: Tuple[int, int]

    def character(self) -> ChernCharacter:
        """(r_α, r_α·α·H, r_α(α²/2 − Δ_α)) on P²."""
        r = self.rank
        return ChernCharacter(r, DivisorClass.of(r * self.alpha), r * (self.alpha ** 2 / 2 - self.discriminant))

    def to_dict(self) -> dict:
        return {
            "p": self.dyadic[0],
            "q": self.dyadic[1],
            "alpha": str(self.alpha),
            "rank": self.rank,
            "delta": str(self.discriminant),
        }


def _delta_for_rank(rank: int) -> Fraction:
    return (1 - Fraction(1, rank * rank)) / 2


def _reduce(p: int, q: int) -> Tuple[int, int]:
    while q > 0 and p % 2 == 0:
        p //= 2
        q -= 1
    return p, q


@lru_cache(maxsize=None)
def _slope(p: int, q: int) -> Fraction:
    if q == 0:
        return Fraction(p)
    left, right = _slope(*_reduce(p - 1, q)), _slope(*_reduce(p + 1, q))
    delta_left = _delta_for_rank(left.denominator)
    delta_right = _delta_for_rank(right.denominator)
    alpha = (left + right) / 2 + (delta_right - delta_left) / (3 + left - right)
    logger.debug(messages.ExceptionalMessages.generated.format(p=p, q=q, alpha=alpha))
    return alpha


def exceptional_from_dyadic(p: int, q: int) -> ExceptionalSlope:
    """ε(p/2^q); p must be odd when q > 0."""
    if q < 0 or (q > 0 and p % 2 == 0):
        raise BadDyadic(messages.ExceptionalMessages.bad_dyadic.format(p=p, q=q))
    alpha = _slope(p, q)
    return ExceptionalSlope(alpha, alpha.denominator, _delta_for_rank(alpha.denominator), (p, q))


def _check_depth(depth: int, max_depth: int) -> None:
    if depth < 0 or depth > max_depth:
        raise DepthExceeded(messages.ExceptionalMessages.depth_capped.format(depth=depth, bound=max_depth))


def enumerate_exceptional(
    depth: int, window: Tuple[Number, Number], max_depth: int = MAX_DEPTH
) -> List[ExceptionalSlope]:
    """All ε(p/2^q) with q ≤ depth and α strictly inside ``window``, sorted by α."""
    _check_depth(depth, max_depth)
    lo, hi = Fraction(window[0]), Fraction(window[1])
    if lo >= hi:
        return []
    # ε is increasing and fixes the integers.
    first, last = math.floor(lo), math.ceil(hi)
    found = {}
    for q in range(depth + 1):
        scale = 1 << q
        for p in range(first * scale, last * scale + 1):
            if q and p % 2 == 0:
                continue
            alpha = _slope(p, q)
            if lo < alpha < hi and alpha not in found:
                found[alpha] = exceptional_from_dyadic(p, q)
    return [found[alpha] for alpha in sorted(found)]


def x_alpha(e: ExceptionalSlope) -> QuadraticNumber:
    """(3 − √(5 + 8Δ_α))/2."""
    return (3 - QuadraticNumber.sqrt(5 + 8 * e.discriminant)) / 2


def interval(e: ExceptionalSlope) -> Tuple[QuadraticNumber, QuadraticNumber]:
    """Endpoints of the open interval I_α = (α − x_α, α + x_α)."""
    half_width = x_alpha(e)
    return e.alpha - half_width, half_width + e.alpha


def in_interval(x: QuadraticNumber, e: ExceptionalSlope) -> bool:
    lo, hi = interval(e)
    return lo < x < hi


def find_interval(x: "QuadraticNumber | Number", depth: int = DEFAULT_DEPTH, max_depth: int = MAX_DEPTH) -> ExceptionalSlope:
    """
    The unique exceptional α with x ∈ I_α.

    Descends the dyadic tree: the bracket (ε(p/2^q), ε((p+1)/2^q)) always
    contains x and neither endpoint's interval does; the midpoint child is
    tested next and the bracket halves toward x.
    """
    _check_depth(depth, max_depth)
    x = QuadraticNumber.coerce(x)
    base = x.floor()
    for integer in (base, base + 1):
        candidate = exceptional_from_dyadic(integer, 0)
        if in_interval(x, candidate):
            logger.debug(messages.ExceptionalMessages.found_interval.format(value=x, alpha=candidate.alpha))
            return candidate
    p, q = base, 0
    for level in range(1, depth + 1):
        p, q = 2 * p + 1, level
        middle = exceptional_from_dyadic(p, q)
        if in_interval(x, middle):
            logger.debug(messages.ExceptionalMessages.found_interval.format(value=x, alpha=middle.alpha))
            return middle
        if x < middle.alpha:
            p -= 1
        # the bracket is now (p/2^q, (p+1)/2^q); p need not be odd here
    raise DepthExceeded(messages.ExceptionalMessages.depth_exceeded.format(value=x, depth=depth))


def _require_positive_rank(v: ChernCharacter) -> None:
    if v.ch0 <= 0:
        raise RankZero(messages.LatticeMessages.rank_zero.format(quantity="P2 exceptional machinery"))


def mu0(v: ChernCharacter) -> QuadraticNumber:
    """Larger root of P(μ + μ(v)) − Δ(v) = ½: (−3 + √(5 + 8Δ))/2 − μ(v)."""
    radicand = 5 + 8 * p2_discriminant(v)
    if radicand < 0:
        raise NoRealRoot(messages.ExceptionalMessages.no_real_root.format(value=radicand))
    return (QuadraticNumber.sqrt(radicand) - 3) / 2 - p2_slope(v)


def dlp_delta(mu: Number, depth: int = DEFAULT_DEPTH) -> Fraction:
    """δ(μ) = P(−|μ − α|) − Δ_α for the α with μ ∈ I_α."""
    mu = Fraction(mu)
    e = find_interval(mu, depth)
    return hilbert_polynomial(-abs(mu - e.alpha)) - e.discriminant


def has_picard_rank_two(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> bool:
    """Δ(v) > δ(μ(v)), strictly."""
    _require_positive_rank(v)
    return p2_discriminant(v) > dlp_delta(p2_slope(v), depth)


def moduli_dimension_p2(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> Fraction:
    """
    r²(2Δ − 1) + 1.

    Nonemptiness: rank 1 needs Δ ≥ 0; exceptional characters give a point;
    otherwise Δ ≥ δ(μ).
    """
    _require_positive_rank(v)
    r, mu, delta = v.ch0, p2_slope(v), p2_discriminant(v)
    if r == 1:
        threshold = Fraction(0)
    else:
        e = find_interval(mu, depth)
        if e.alpha == mu and e.rank == r and delta == e.discriminant:
            return Fraction(0)
        threshold = hilbert_polynomial(-abs(mu - e.alpha)) - e.discriminant
    if delta < threshold:
        raise BelowDLPCurve(messages.ExceptionalMessages.below_dlp.format(delta=delta, dlp=threshold))
    return r * r * (2 * delta - 1) + 1


def corresponding_exceptional(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> ExceptionalSlope:
    return find_interval(mu0(v), depth)


@dataclass(frozen=True)
class OrthogonalInvariants:
    """(μ⁺, Δ⁺) together with the case that produced them."""

    mu_plus: Fraction
    delta_plus: Fraction
    case: int
    chi: Fraction
    exceptional: ExceptionalSlope

    def as_tuple(self) -> Tuple[Fraction, Fraction]:
        return self.mu_plus, self.delta_plus


def orthogonal_invariants(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> OrthogonalInvariants:
    """
    Case on χ(v, w) for the corresponding exceptional character w.

    (1) χ < 0: Q_v ∩ Q_{−w}.
    (2) χ = 0: (α, Δ_α).
    (3) χ > 0: Q_v ∩ Q_{w'} with μ(w') = −α − 3 and Δ(w') = Δ_α.
    In cases (1) and (3), Δ⁺ = P(μ⁺ + μ(v)) − Δ(v).
    """
    _require_positive_rank(v)
    e = corresponding_exceptional(v, depth)
    chi = euler_pairing_p2(v, e.character())
    mu, delta = p2_slope(v), p2_discriminant(v)
    alpha, delta_alpha = e.alpha, e.discriminant
    if chi == 0:
        return OrthogonalInvariants(alpha, delta_alpha, 2, chi, e)
    if chi < 0:
        case, denominator = 1, mu + alpha
    else:
        case, denominator = 3, mu + alpha + 3
    if denominator == 0:
        raise SingularCase(messages.ExceptionalMessages.singular_case.format(case=case, character=v))
    if case == 1:
        mu_plus = (delta - delta_alpha) / denominator - Fraction(3, 2) + (alpha - mu) / 2
    else:
        mu_plus = (delta - delta_alpha) / denominator + (alpha - mu) / 2
    delta_plus = hilbert_polynomial(mu_plus + mu) - delta
    return OrthogonalInvariants(mu_plus, delta_plus, case, chi, e)


def effective_wall_center(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> Fraction:
    """s₀ = −μ⁺ − 3/2."""
    return -orthogonal_invariants(v, depth).mu_plus - Fraction(3, 2)


def mu_plus_bound(v: ChernCharacter) -> QuadraticNumber:
    """√(2Δ + 1) − 3/2 − μ."""
    delta = p2_discriminant(v)
    if delta < 0:
        raise NegativeDiscriminant(messages.ExceptionalMessages.negative_discriminant.format(delta=delta))
    return QuadraticNumber.sqrt(2 * delta + 1) - Fraction(3, 2) - p2_slope(v)


def mu_plus_bound_holds(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> bool:
    """Exact test μ⁺ < √(2Δ + 1) − 3/2 − μ. Informative; violations are logged."""
    bound = mu_plus_bound(v)
    mu_plus = orthogonal_invariants(v, depth).mu_plus
    holds = QuadraticNumber.rational(mu_plus) < bound
    if not holds:
        logger.warning(messages.ExceptionalMessages.bound_violated.format(mu_plus=mu_plus, bound=bound, character=v))
    return holds


def mu_plus_lemma_bound(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> sympy.Expr:
    """
    Case-wise upper bound on μ⁺ (two radicals, so a sympy expression).

    With S = 3 + √(5 + 8Δ) − 2√5:
      χ(v, w) < 0:  2Δ/S − 3/2 + S/4 − μ
      χ(v, w) ≥ 0:  S/2 − μ
    """
    delta, mu = p2_discriminant(v), p2_slope(v)
    if delta < 0:
        raise NegativeDiscriminant(messages.ExceptionalMessages.negative_discriminant.format(delta=delta))
    d = sympy.Rational(delta.numerator, delta.denominator)
    m = sympy.Rational(mu.numerator, mu.denominator)
    spread = 3 + sympy.sqrt(5 + 8 * d) - 2 * sympy.sqrt(5)
    if orthogonal_invariants(v, depth).case == 1:
        return 2 * d / spread - sympy.Rational(3, 2) + spread / 4 - m
    return spread / 2 - m


def mu_plus_lemma_holds(v: ChernCharacter, depth: int = DEFAULT_DEPTH) -> bool:
    """μ⁺ ≤ lemma bound, decided by sympy. Informative; violations are logged."""
    bound = mu_plus_lemma_bound(v, depth)
    mu_plus = orthogonal_invariants(v, depth).mu_plus
    holds = bool(sympy.Rational(mu_plus.numerator, mu_plus.denominator) <= bound)
    if not holds:
        logger.warning(messages.ExceptionalMessages.bound_violated.format(mu_plus=mu_plus, bound=bound, character=v))
    return holds
