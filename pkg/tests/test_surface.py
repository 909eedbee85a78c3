from fractions import Fraction

import pytest

from src.lattice.surface import (
    DivisorClass,
    SurfaceKind,
    SurfaceModel,
    genus_of_curve,
    intersect,
    is_ample,
)
from src.utils.errors import DimensionMismatch, UnsupportedSurface, ValidationError


@pytest.fixture
def p2():
    return SurfaceModel.projective_plane()


@pytest.fixture
def f1():
    return SurfaceModel.hirzebruch(1)


def test_plane_line_squares_to_one(p2):
    H = p2.divisor(1)
    assert intersect(p2, H, H) == 1


def test_hirzebruch_section_has_negative_self_intersection(f1):
    M = f1.divisor(1, 0)
    assert intersect(f1, M, M) == -1


def test_hirzebruch_polarization_square(f1):
    H = f1.divisor(1, 2)
    assert intersect(f1, H, H) == 3


def test_hirzebruch_canonical_class():
    f3 = SurfaceModel.hirzebruch(3)
    assert f3.canonical_class == DivisorClass.of(-2, -5)
    assert f3.intersection_matrix == ((-3, 1), (1, 0))
    assert f3.label == "F_3"


def test_canonical_square_is_eight_on_hirzebruch(f1):
    K = f1.canonical_class
    assert intersect(f1, K, K) == 8


@pytest.mark.parametrize(
    "m, coefficients, expected",
    [
        (2, (1, 3), True),
        (2, (1, 2), False),
        (2, (0, 5), False),
        (1, (2, 3), True),
    ],
)
def test_is_ample_on_hirzebruch(m, coefficients, expected):
    surface = SurfaceModel.hirzebruch(m)
    assert is_ample(surface, surface.divisor(*coefficients)) is expected


def test_is_ample_on_plane(p2):
    assert is_ample(p2, p2.divisor(2))
    assert not is_ample(p2, p2.divisor(0))
    assert not is_ample(p2, p2.divisor(-1))


def test_custom_surface_has_no_ampleness_oracle():
    surface = SurfaceModel.custom([[0, 1], [1, 0]], [-2, -2], 1)
    with pytest.raises(UnsupportedSurface):
        is_ample(surface, surface.divisor(1, 1))


def test_plane_quartic_genus(p2):
    assert genus_of_curve(p2, p2.divisor(4)) == 3


@pytest.mark.parametrize("multiple, genus", [(1, 0), (2, 2)])
def test_hirzebruch_curve_genus(f1, multiple, genus):
    assert genus_of_curve(f1, f1.divisor(multiple, 2 * multiple)) == genus


def test_divisor_checks_coefficient_count(p2):
    with pytest.raises(DimensionMismatch):
        p2.divisor(1, 2)
    with pytest.raises(DimensionMismatch):
        intersect(p2, DivisorClass.of(1), DivisorClass.of(1, 0))


def test_bad_hirzebruch_parameter():
    for m in (0, -1, True):
        with pytest.raises(ValidationError):
            SurfaceModel.hirzebruch(m)


def test_asymmetric_matrix_is_rejected():
    with pytest.raises(ValidationError):
        SurfaceModel.custom([[0, 1], [2, 0]], [0, 0], 1)


def test_divisor_arithmetic_stays_exact():
    D = DivisorClass.of(1, Fraction(1, 3))
    assert (D * 3).coefficients == (Fraction(3), Fraction(1))
    assert (D / 2).coefficients == (Fraction(1, 2), Fraction(1, 6))
    assert (D - D).is_zero()
    assert not D.is_integral()


def test_proportional_factor():
    H = DivisorClass.of(1, 2)
    assert DivisorClass.of(3, 6).proportional_factor(H) == 3
    assert DivisorClass.of(3, 5).proportional_factor(H) is None
    assert DivisorClass.of(0, 0).proportional_factor(H) == 0
    assert DivisorClass.of(1, 0).proportional_factor(DivisorClass.of(2, 0)) == Fraction(1, 2)


def test_surface_serialisation(p2, f1):
    assert p2.to_dict() == {"kind": "p2"}
    assert f1.to_dict() == {"kind": "hirzebruch", "m": 1}
    assert f1.kind is SurfaceKind.HIRZEBRUCH
