from fractions import Fraction

import pytest

from diagonal.elliptic import (
    INFINITY,
    CurvePoint,
    DiagonalCubic,
    QuarticCurve,
    QuarticTransport,
    WeierstrassCurve,
    curve_2666,
    division_polynomial,
    ec_add,
    ec_multiply,
    is_torsion_over_Q,
    lemma_positive_rank,
    primitive_triple,
    quartic_group,
    rational_nth_roots,
    torsion_j0,
    torsion_j1728,
    torsion_specializations_2666,
)
from diagonal.exceptions import (
    DegenerateLocusError,
    OffCurveError,
    SingularCurveError,
    ValidationError,
)


@pytest.fixture
def six_torsion_curve():
    return WeierstrassCurve(0, 1)


def test_singular_curve_rejected():
    with pytest.raises(SingularCurveError):
        WeierstrassCurve(0, 0)


def test_point_needs_both_coordinates():
    with pytest.raises(ValidationError):
        CurvePoint(1, None)


def test_doubling_on_y2_x3_plus_1(six_torsion_curve):
    P = CurvePoint(2, 3)
    assert six_torsion_curve.add(P, P) == CurvePoint(0, 1)
    assert ec_multiply(six_torsion_curve, P, 3) == CurvePoint(-1, 0)
    assert ec_multiply(six_torsion_curve, P, 6) == INFINITY


def test_add_rejects_points_off_the_curve(six_torsion_curve):
    with pytest.raises(OffCurveError):
        ec_add(six_torsion_curve, CurvePoint(1, 1), CurvePoint(2, 3))


def test_negative_multiple(six_torsion_curve):
    P = CurvePoint(2, 3)
    assert six_torsion_curve.multiply(P, -1) == CurvePoint(2, -3)


def test_torsion_order(six_torsion_curve):
    result = is_torsion_over_Q(six_torsion_curve, CurvePoint(2, 3))
    assert result.is_torsion
    assert result.order == 6


def test_infinite_order():
    curve = WeierstrassCurve(0, -2)
    result = is_torsion_over_Q(curve, CurvePoint(3, 5))
    assert not result.is_torsion
    assert str(result) == "infinite order"


def test_division_polynomials_vanish_on_torsion(six_torsion_curve):
    psi2 = division_polynomial(six_torsion_curve, 2)
    psi3 = division_polynomial(six_torsion_curve, 3)
    assert psi2(Fraction(-1)) == 0
    assert psi3(Fraction(0)) == 0
    assert psi3(Fraction(2)) != 0


def test_division_polynomial_range(six_torsion_curve):
    with pytest.raises(ValidationError):
        division_polynomial(six_torsion_curve, 5)


@pytest.mark.parametrize(
    "D, label",
    [(1, "Z/6Z"), (64, "Z/6Z"), (-432, "Z/3Z"), (4, "Z/3Z"), (8, "Z/2Z"), (2, "trivial")],
)
def test_torsion_j0(D, label):
    assert torsion_j0(D).label == label


@pytest.mark.parametrize("D, order", [(4, 4), (64, 4), (-1, 4), (1, 2), (3, 2)])
def test_torsion_j1728(D, order):
    assert torsion_j1728(D).order == order


def test_lemma_positive_rank():
    # -4 alpha beta = -8 is neither 4 nor minus a square
    assert lemma_positive_rank(1, 2)
    # -4 * 1 * (-1) = 4 has torsion of order 4
    assert not lemma_positive_rank(1, -1)


def test_rational_nth_roots():
    assert rational_nth_roots(Fraction(4, 9), 2) == [Fraction(-2, 3), Fraction(2, 3)]
    assert rational_nth_roots(Fraction(-8), 3) == [Fraction(-2)]
    assert rational_nth_roots(Fraction(2), 2) == []
    assert rational_nth_roots(Fraction(-4), 2) == []


def test_quartic_transport_round_trip():
    transport = QuarticTransport((1, 0, -1, 0, 1), (0, 1))
    image = transport.to_weierstrass((1, 1))
    assert transport.curve.contains(image)
    assert transport.from_weierstrass(image) == (1, 1)
    assert transport.to_weierstrass((0, 1)) == INFINITY
    assert transport.from_weierstrass(INFINITY) == (0, 1)


def test_quartic_transport_ramified_locus():
    transport = QuarticTransport((1, 0, 0, 0, 1), (0, 1))
    assert (transport.curve.A, transport.curve.B) == (-4, 0)
    two_torsion = transport.to_weierstrass((0, -1))
    assert two_torsion == CurvePoint(0, 0)
    with pytest.raises(DegenerateLocusError, match="y = 0"):
        transport.from_weierstrass(two_torsion)


def test_quartic_transport_base_point_checks():
    with pytest.raises(OffCurveError):
        QuarticTransport((1, 0, 0, 0, 1), (0, 2))
    with pytest.raises(DegenerateLocusError):
        QuarticTransport((0, 0, 0, 0, 1), (0, 0))


def test_primitive_triple():
    assert primitive_triple((Fraction(-1, 2), 1, 0)) == (1, -2, 0)
    with pytest.raises(DegenerateLocusError):
        primitive_triple((0, 0, 0))


def test_fermat_cubic_group_has_order_three():
    cubic = DiagonalCubic((1, 1, 1))
    origin = (1, -1, 0)
    P = (1, 0, -1)
    assert cubic.tangent_point(origin) == origin
    assert cubic.add(P, P, origin) == (0, 1, -1)
    assert cubic.point_order(P, origin) == 3


def test_diagonal_cubic_rejects_zero_coefficient():
    with pytest.raises(ValidationError, match="zero coefficient"):
        DiagonalCubic((1, 0, 1))


def test_section_of_the_2666_curve():
    curve, R = curve_2666(1, 1)
    assert curve.contains(R)
    with pytest.raises(ValidationError):
        curve_2666(0, 1)


def test_torsion_specializations_at_a_b_one():
    report = torsion_specializations_2666(1, 1)
    assert report.generic_nontorsion
    assert not report.order6_possible
    # 9a^2 t^12 = b^2 has no rational root
    assert report.buckets[2] == []
    assert report.total <= 26
    assert report.to_dict()["total"] == report.total


def test_quartic_group_identity():
    curve = QuarticCurve(alpha=1, beta=3, gamma=2)
    assert curve.rational_points == ((1, 2), (1, -2), (-1, 2), (-1, -2))
    assert quartic_group(curve, (1, 2), (1, 2), (-1, 2)) == (-1, 2)
    assert curve.add((-1, 2), (1, 2), (1, 2)) == (-1, 2)


def test_quartic_group_validation():
    with pytest.raises(ValidationError, match="gamma"):
        QuarticCurve(alpha=1, beta=3, gamma=3)
    curve = QuarticCurve(alpha=1, beta=3, gamma=2)
    with pytest.raises(ValidationError, match="not one of"):
        quartic_group(curve, (0, 1), (1, 2), (1, 2))
