import random
from fractions import Fraction

import pytest

from diagonal.exceptions import ConeError, ValidationError
from diagonal.surface import (
    TABLE1,
    RationalCone,
    brute_force_rays,
    extremal_rays,
    min_self_intersection,
    primitive,
)


def _identity(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def test_orthant():
    cone = RationalCone(_identity(3))
    assert extremal_rays(cone) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_cut_orthant():
    cone = RationalCone(((1, 0, 0), (0, 1, 0), (1, 1, -1), (0, 0, 1)))
    expected = [(0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1)]
    assert extremal_rays(cone) == expected
    assert brute_force_rays(cone) == expected


def test_single_ray():
    cone = RationalCone.single_ray((2, 4))
    assert extremal_rays(cone) == [(1, 2)]
    assert brute_force_rays(cone) == [(1, 2)]


def test_not_pointed():
    cone = RationalCone(((1, 0, 0), (0, 1, 0)))
    with pytest.raises(ConeError, match="not pointed"):
        extremal_rays(cone)
    with pytest.raises(ConeError):
        brute_force_rays(cone)


def test_cone_validation():
    with pytest.raises(ValidationError):
        RationalCone(())
    with pytest.raises(ValidationError, match="mixed lengths"):
        RationalCone(((1, 0), (1, 0, 0)))
    with pytest.raises(ValidationError, match="nonzero"):
        RationalCone(((0, 0), (1, 0)))


def test_primitive():
    assert primitive([Fraction(1, 2), 1]) == (1, 2)
    assert primitive([-4, 6]) == (-2, 3)
    with pytest.raises(ValidationError):
        primitive([0, 0])


def test_min_self_intersection_on_orthant():
    result = min_self_intersection(RationalCone(_identity(6)))
    assert result.value == -4
    assert result.ray == (0, 0, 0, 0, 0, 1)


def test_min_self_intersection_dimension_mismatch():
    with pytest.raises(ValidationError, match="does not match"):
        min_self_intersection(RationalCone(_identity(3)), TABLE1)


def _random_pointed_cone(rng):
    d = rng.randint(2, 5)
    while True:
        count = rng.randint(d, 12)
        rows = []
        while len(rows) < count:
            row = tuple(rng.randint(-3, 3) for _ in range(d))
            if any(row):
                rows.append(row)
        cone = RationalCone(tuple(rows))
        if cone.lineality_direction() is None:
            return cone


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(60))
def test_double_description_matches_oracle(seed):
    cone = _random_pointed_cone(random.Random(seed))
    assert extremal_rays(cone) == brute_force_rays(cone)


def test_unbounded_cut_in_the_plane():
    # no orthant rows: the cone between the rays (1, 2) and (2, 1)
    cone = RationalCone(((2, -1), (-1, 2)))
    assert extremal_rays(cone) == brute_force_rays(cone) == [(1, 2), (2, 1)]
