from fractions import Fraction

import pytest

from diagonal.arith import Poly
from diagonal.exceptions import SingularCurveError, SplitError, ValidationError, VerificationError
from diagonal.pencils import (
    PencilCurve,
    QuadSplit,
    build_pencil,
    cubic_point_search,
    farey_parameters,
    member_point_order,
    pencil_survey,
    richmond_split,
    verify_recovered,
    verify_split,
    weierstrass_236,
)


def test_published_split(published_split):
    assert published_split.mu == 6
    assert published_split.coefficients == (1, 1, 2, 2)
    assert verify_split(published_split)


def test_split_with_wrong_mu_is_rejected(published_split):
    with pytest.raises(VerificationError):
        QuadSplit(
            coefficients=(1, 1, 2, 2),
            L1=published_split.L1,
            L2=published_split.L2,
            L3=published_split.L3,
            L4=published_split.L4,
            mu=5,
        )


def test_pencil_coefficients(published_pencil):
    expected = (Poly([5, -8, 5]), Poly([1, -10, 7]), Poly([-7, 10, -1]))
    got = (published_pencil.A, published_pencil.B, published_pencil.C)
    assert got == expected or got == tuple(-f for f in expected)


def test_member_at_one_thirteenth(published_pencil):
    search = cubic_point_search(published_pencil, "1/13", 20)
    assert (5, 18, 7) in search.points
    assert not search.degenerate
    x = verify_recovered(published_pencil, "1/13", (5, 18, 7))
    assert abs(x) == 8261
    assert x ** 2 + 5 ** 6 == 2 * 18 ** 6 + 2 * 7 ** 6 == 68259746


def test_point_has_infinite_order(published_pencil):
    assert member_point_order(published_pencil, "1/13", (5, 18, 7)) is None


def test_verify_recovered_rejects_off_member(published_pencil):
    with pytest.raises(VerificationError):
        verify_recovered(published_pencil, "1/13", (1, 1, 1))


def test_search_height_must_be_positive(published_pencil):
    with pytest.raises(ValidationError):
        cubic_point_search(published_pencil, 0, 0)


def test_richmond_split_with_seed():
    split = richmond_split(1, 1, 1, 1, P0=(1, 1, 1, 1))
    assert split.coefficients == (1, 1, 1, 1)
    assert verify_split(split)


def test_richmond_split_searches_seed():
    assert verify_split(richmond_split(1, 1, 2, 2))


def test_richmond_split_errors():
    with pytest.raises(SplitError, match="not a nonzero square"):
        richmond_split(1, 1, 1, 2)
    with pytest.raises(SplitError, match="not on the quadric"):
        richmond_split(1, 1, 1, 1, P0=(1, 0, 0, 0))


def test_weierstrass_model_needs_236(published_pencil):
    with pytest.raises(ValidationError, match="2,3,6"):
        weierstrass_236(published_pencil)


def test_pencil_exponents_are_checked():
    one = Poly([1])
    with pytest.raises(ValidationError):
        PencilCurve(one, one, one, (2, 2, 2))


def test_farey_parameters():
    assert farey_parameters(1) == [-1, 0, 1]
    assert farey_parameters(2) == [
        -1, 0, 1, -2, Fraction(-1, 2), Fraction(1, 2), 2,
    ]
    with pytest.raises(ValidationError):
        farey_parameters(0)


def test_pencil_survey_points_lie_on_surface(published_split, published_pencil):
    points = pencil_survey(published_split, (3, 3, 3), bound=1, height=3, workers=1)
    for p in points:
        assert published_pencil.surface_residual(p.x, p.y, p.z, p.w) == 0


def test_weierstrass_maps_round_trip(published_split):
    model = weierstrass_236(build_pencil(published_split, (2, 3, 6)))
    A, B, C = model.pencil.at(2)
    curve, image = model.to_weierstrass(2, 3, 5, 1)
    assert curve.B == -(A ** 3) * B ** 2 * C
    assert model.from_weierstrass(2, image) == (3, 5, 1)


def test_member_with_vanishing_c_is_singular():
    one = Poly([1])
    model = weierstrass_236(PencilCurve(one, one, Poly([-1, 1]), (2, 3, 6)))
    with pytest.raises(SingularCurveError):
        model.to_weierstrass(1, 1, 1, 1)
