from fractions import Fraction

import pytest

from src.lattice.chern import (
    ChernCharacter,
    TwistContext,
    bogomolov_ok,
    classical_discriminant,
    discriminant,
    euler_char,
    euler_char_p2,
    euler_pairing_p2,
    is_sheaf_like,
    minimizing_twist,
    pushforward,
    require_sheaf_like,
    shift,
    slope,
    tensor_line,
    twist,
)
from src.lattice.surface import DivisorClass, SurfaceModel
from src.utils.errors import NonPositiveH, NotSheafLike, RankZero, WrongSurface

P2 = SurfaceModel.projective_plane()
F1 = SurfaceModel.hirzebruch(1)


def p2_char(r, deg, ch2):
    return ChernCharacter.of(r, [deg], Fraction(ch2))


@pytest.fixture
def plane_ctx():
    return TwistContext.untwisted(P2)


def test_zero_twist_is_identity():
    v = p2_char(2, 0, -2)
    assert twist(v, P2.zero(), P2) == v


def test_twist_by_line_class():
    assert twist(p2_char(2, 1, Fraction(-3, 2)), P2.divisor(1), P2) == p2_char(2, -1, Fraction(-3, 2))
    assert twist(p2_char(1, 0, 0), P2.divisor(1), P2) == p2_char(1, -1, Fraction(1, 2))


def test_tensor_line():
    assert tensor_line(p2_char(2, 0, -2), P2.divisor(-5), P2) == p2_char(2, -10, 23)
    v = p2_char(3, 2, Fraction(1, 2))
    assert tensor_line(v, P2.zero(), P2) == v
    for d in range(1, 5):
        assert tensor_line(p2_char(1, 0, 0), P2.divisor(d), P2) == p2_char(1, d, Fraction(d * d, 2))


def test_shift_negates_and_is_involutive():
    v = p2_char(2, -10, 23)
    assert shift(v) == p2_char(-2, 10, -23)
    assert shift(shift(v)) == v
    assert shift(ChernCharacter.of(0, [1], 5)) == ChernCharacter.of(0, [-1], -5)


def test_slopes(plane_ctx):
    assert slope(p2_char(2, 1, Fraction(-3, 2)), plane_ctx, P2) == Fraction(1, 2)
    assert slope(p2_char(-2, 10, -23), plane_ctx, P2) == -5


def test_slope_on_hirzebruch():
    ctx = TwistContext.build(F1, F1.divisor(1, 2))
    assert slope(ChernCharacter.of(2, [2, 4], 0), ctx, F1) == 1


def test_discriminants(plane_ctx):
    assert discriminant(p2_char(2, 0, -2), plane_ctx, P2) == 1
    assert discriminant(p2_char(-2, 10, -23), plane_ctx, P2) == 1
    assert discriminant(p2_char(2, 1, Fraction(-3, 2)), plane_ctx, P2) == Fraction(7, 8)


def test_classical_discriminant():
    assert classical_discriminant(p2_char(2, 0, -2), P2) == 1
    assert classical_discriminant(p2_char(4, 0, 0), P2) == 0
    assert classical_discriminant(p2_char(2, 3, Fraction(3, 2)), P2) == Fraction(3, 8)


def test_minimizing_twist_on_plane_is_zero():
    assert minimizing_twist(p2_char(3, 2, -5), P2.divisor(1), P2).is_zero()


def test_minimizing_twist_on_hirzebruch():
    H = F1.divisor(1, 2)
    v = ChernCharacter.of(2, [2, 0], -1)
    D = minimizing_twist(v, H, F1)
    assert D == DivisorClass.of(Fraction(2, 3), Fraction(-2, 3))
    ctx = TwistContext.build(F1, H, D)
    assert 3 * discriminant(v, ctx, F1) == classical_discriminant(v, F1)


def test_minimizing_twist_vanishes_for_proportional_class():
    H = F1.divisor(1, 2)
    assert minimizing_twist(ChernCharacter.of(2, [2, 4], 0), H, F1).is_zero()


def test_pushforward():
    assert pushforward(P2.divisor(1), 1, 0, P2) == p2_char(0, 1, Fraction(-1, 2))
    assert pushforward(P2.divisor(4), 2, 4, P2) == p2_char(0, 8, -12)
    C = F1.divisor(1, 2)
    assert pushforward(C, 1, Fraction(3, 2), F1).ch2 == 0


def test_euler_char_p2():
    assert euler_char_p2(p2_char(1, 0, 0)) == 1
    assert euler_char_p2(p2_char(2, 1, Fraction(-3, 2))) == 2
    assert euler_char_p2(p2_char(2, -7, Fraction(21, 2))) == 2


def test_generic_riemann_roch_matches_plane_formula():
    for v in (p2_char(2, 1, Fraction(-3, 2)), p2_char(3, -4, 1), p2_char(1, 5, Fraction(25, 2))):
        assert euler_char(v, P2) == euler_char_p2(v)


def test_riemann_roch_on_hirzebruch():
    assert euler_char(ChernCharacter.of(2, [2, 4], 0), F1) == 7


def test_euler_pairing():
    O = p2_char(1, 0, 0)
    v = p2_char(2, 0, -2)
    assert euler_pairing_p2(O, O) == 1
    assert euler_pairing_p2(v, O) == 0
    assert euler_pairing_p2(v, v) == -4


def test_bogomolov(plane_ctx):
    assert bogomolov_ok(p2_char(2, 0, -2), plane_ctx, P2)
    assert not bogomolov_ok(p2_char(2, 1, Fraction(1, 2)), plane_ctx, P2)
    assert bogomolov_ok(p2_char(3, 0, 0), plane_ctx, P2)


def test_sheaf_like_gate():
    assert is_sheaf_like(p2_char(2, 1, Fraction(-3, 2)), P2)
    with pytest.raises(NotSheafLike):
        require_sheaf_like(p2_char(3, 3, 0), P2)
    assert not is_sheaf_like(ChernCharacter.of(2, [Fraction(1, 2)], 0), P2)


def test_rank_zero_has_no_slope(plane_ctx):
    with pytest.raises(RankZero):
        slope(p2_char(0, 1, 0), plane_ctx, P2)
    with pytest.raises(RankZero):
        discriminant(p2_char(0, 1, 0), plane_ctx, P2)


def test_context_needs_positive_polarization():
    with pytest.raises(NonPositiveH):
        TwistContext.build(F1, F1.divisor(0, 1))


def test_plane_helpers_reject_other_surfaces():
    with pytest.raises(WrongSurface):
        euler_char_p2(ChernCharacter.of(2, [1, 1], 0))


def test_ch0_must_be_integral():
    with pytest.raises(ValueError):
        ChernCharacter(Fraction(1, 2), DivisorClass.of(0), Fraction(0))
