import logging
from fractions import Fraction

import pytest
import sympy

from src.lattice.chern import ChernCharacter, hilbert_polynomial, p2_discriminant, p2_slope
from src.p2.exceptional import (
    corresponding_exceptional,
    dlp_delta,
    effective_wall_center,
    enumerate_exceptional,
    exceptional_from_dyadic,
    find_interval,
    has_picard_rank_two,
    in_interval,
    interval,
    moduli_dimension_p2,
    mu0,
    mu_plus_bound,
    mu_plus_bound_holds,
    mu_plus_lemma_bound,
    mu_plus_lemma_holds,
    orthogonal_invariants,
    x_alpha,
)
from src.p2.quadratic import QuadraticNumber
from src.utils.errors import BadDyadic, BelowDLPCurve, DepthExceeded, NegativeDiscriminant, NoRealRoot


def p2_char(r, deg, ch2):
    return ChernCharacter.of(r, [deg], Fraction(ch2))


V = p2_char(2, 0, -2)
RUNNING = p2_char(2, 1, Fraction(-3, 2))


@pytest.mark.parametrize(
    "p, q, alpha, rank, delta",
    [
        (0, 0, Fraction(0), 1, Fraction(0)),
        (3, 0, Fraction(3), 1, Fraction(0)),
        (1, 1, Fraction(1, 2), 2, Fraction(3, 8)),
        (1, 2, Fraction(2, 5), 5, Fraction(12, 25)),
        (3, 2, Fraction(3, 5), 5, Fraction(12, 25)),
    ],
)
def test_dyadic_generation(p, q, alpha, rank, delta):
    e = exceptional_from_dyadic(p, q)
    assert (e.alpha, e.rank, e.discriminant) == (alpha, rank, delta)


def test_generation_is_translation_invariant():
    assert exceptional_from_dyadic(3, 1).alpha == Fraction(3, 2)
    assert exceptional_from_dyadic(-3, 2).alpha == Fraction(-3, 5)


@pytest.mark.parametrize("p, q", [(2, 1), (1, -1), (4, 3)])
def test_bad_dyadic(p, q):
    with pytest.raises(BadDyadic):
        exceptional_from_dyadic(p, q)


def test_enumeration():
    assert [e.alpha for e in enumerate_exceptional(1, (0, 1))] == [Fraction(1, 2)]
    assert [e.alpha for e in enumerate_exceptional(2, (0, 1))] == [Fraction(2, 5), Fraction(1, 2), Fraction(3, 5)]
    assert enumerate_exceptional(4, (1, 1)) == []
    assert [e.alpha for e in enumerate_exceptional(0, (Fraction(-1, 2), Fraction(5, 2)))] == [0, 1, 2]


def test_enumeration_depth_is_capped():
    with pytest.raises(DepthExceeded):
        enumerate_exceptional(17, (0, 1))
    with pytest.raises(DepthExceeded):
        enumerate_exceptional(5, (0, 1), max_depth=4)


def test_depth_eight_intervals_are_disjoint():
    slopes = enumerate_exceptional(8, (0, 1))
    assert len(slopes) == 2 ** 8 - 1
    for e in slopes:
        assert e.alpha.denominator == e.rank
        assert e.discriminant == (1 - Fraction(1, e.rank ** 2)) / 2
    for left, right in zip(slopes, slopes[1:]):
        assert left.alpha < right.alpha
        assert interval(left)[1] <= interval(right)[0]


def test_x_alpha():
    assert x_alpha(exceptional_from_dyadic(0, 0)) == QuadraticNumber(Fraction(3, 2), Fraction(-1, 2), 5)
    assert x_alpha(exceptional_from_dyadic(1, 1)) == QuadraticNumber(Fraction(3, 2), -1, 2)
    assert x_alpha(exceptional_from_dyadic(1, 2)) == QuadraticNumber(Fraction(3, 2), Fraction(-1, 10), 221)


def test_mu0():
    assert mu0(V) == (QuadraticNumber.sqrt(13) - 3) / 2
    assert mu0(RUNNING) == QuadraticNumber(-2, 1, 3)
    assert mu0(p2_char(2, 0, -1)) == 0


def test_mu0_is_a_root_of_the_associated_quadratic():
    for v in (V, RUNNING, p2_char(3, -1, -4), p2_char(5, 2, -7)):
        x = mu0(v) + p2_slope(v)
        value = (x * x + 3 * x + 2) / 2 - p2_discriminant(v)
        assert value == Fraction(1, 2)


def test_mu0_without_real_root():
    with pytest.raises(NoRealRoot):
        mu0(p2_char(1, 0, 1))


def test_find_interval():
    assert find_interval(mu0(V)).alpha == 0
    assert find_interval(Fraction(1, 2)).alpha == Fraction(1, 2)
    assert find_interval(QuadraticNumber(-2, 1, 3)).alpha == 0
    assert find_interval(Fraction(5, 2)).alpha == Fraction(5, 2)


def test_find_interval_agrees_with_exhaustive_scan():
    v = p2_char(2, -1, Fraction(-5, 4))
    root = mu0(v)
    found = find_interval(root, 8)
    window = (root.floor() - 1, root.floor() + 2)
    containing = [e for e in enumerate_exceptional(8, window) if in_interval(root, e)]
    assert [e.alpha for e in containing] == [found.alpha]


def test_find_interval_depth_exceeded():
    with pytest.raises(DepthExceeded):
        find_interval(Fraction(1, 2), depth=0)


def test_dlp_delta():
    assert dlp_delta(0) == 1
    assert dlp_delta(Fraction(1, 2)) == Fraction(5, 8)
    assert dlp_delta(Fraction(1, 4)) == Fraction(21, 32)
    assert dlp_delta(Fraction(1, 8)) == hilbert_polynomial(Fraction(-1, 8))


def test_picard_rank_two():
    assert has_picard_rank_two(RUNNING)
    assert not has_picard_rank_two(p2_char(2, 1, Fraction(-1, 2)))
    assert not has_picard_rank_two(V)


def test_moduli_dimension():
    assert moduli_dimension_p2(V) == 5
    assert moduli_dimension_p2(RUNNING) == 4
    assert moduli_dimension_p2(p2_char(1, 0, Fraction(-1, 2))) == 1
    assert moduli_dimension_p2(p2_char(2, 1, Fraction(-1, 2))) == 0


def test_below_dlp_curve():
    with pytest.raises(BelowDLPCurve):
        moduli_dimension_p2(p2_char(4, 2, -1))


def test_corresponding_exceptional():
    assert corresponding_exceptional(V).alpha == 0
    assert corresponding_exceptional(RUNNING).rank == 1


def test_orthogonal_invariants_case_two():
    inv = orthogonal_invariants(V)
    assert inv.case == 2
    assert inv.as_tuple() == (0, 0)
    assert effective_wall_center(V) == Fraction(-3, 2)


def test_orthogonal_invariants_case_one():
    inv = orthogonal_invariants(RUNNING)
    assert inv.case == 1
    assert inv.chi == -1
    assert inv.as_tuple() == (0, 1)
    assert effective_wall_center(RUNNING) == Fraction(-3, 2)
    # Q_v and Q_{-w} meet at mu+
    alpha, delta_alpha = inv.exceptional.alpha, inv.exceptional.discriminant
    mu, delta = p2_slope(RUNNING), p2_discriminant(RUNNING)
    assert hilbert_polynomial(inv.mu_plus + mu) - delta == hilbert_polynomial(inv.mu_plus - alpha) - delta_alpha


def test_orthogonal_invariants_case_three():
    v = p2_char(4, -2, -2)
    inv = orthogonal_invariants(v)
    assert inv.case == 3
    assert inv.exceptional.alpha == Fraction(1, 2)
    assert inv.as_tuple() == (Fraction(7, 12), Fraction(145, 288))
    assert hilbert_polynomial(inv.mu_plus - Fraction(7, 2)) - Fraction(3, 8) == inv.delta_plus
    assert effective_wall_center(v) == Fraction(-25, 12)


def test_restriction_wall_outside_effective_wall():
    from src.lattice.chern import TwistContext
    from src.lattice.surface import SurfaceModel
    from src.stability.walls import restriction_wall

    p2 = SurfaceModel.projective_plane()
    w = restriction_wall(V, p2.divisor(4), TwistContext.untwisted(p2), p2)
    assert w.center_s < effective_wall_center(V)


def test_mu_plus_bound():
    assert mu_plus_bound(V) == QuadraticNumber.sqrt(3) - Fraction(3, 2)
    assert mu_plus_bound(p2_char(1, 0, 0)) == Fraction(-1, 2)
    assert mu_plus_bound_holds(V)
    with pytest.raises(NegativeDiscriminant):
        mu_plus_bound(p2_char(2, 1, Fraction(1, 2)))


def test_mu_plus_bound_violation_is_reported(caplog):
    with caplog.at_level(logging.WARNING, logger="src.p2.exceptional"):
        assert not mu_plus_bound_holds(RUNNING)
    assert "Informative bound violated" in caplog.text
    assert mu_plus_bound(RUNNING) == QuadraticNumber.sqrt(Fraction(11, 4)) - 2


def test_mu_plus_lemma_bound():
    bound = mu_plus_lemma_bound(V)
    expected = (3 + sympy.sqrt(13) - 2 * sympy.sqrt(5)) / 2
    assert sympy.simplify(bound - expected) == 0
    assert mu_plus_lemma_holds(V)
    assert not mu_plus_lemma_holds(RUNNING)
