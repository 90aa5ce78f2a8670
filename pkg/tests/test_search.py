import pytest

from diagonal.exceptions import ValidationError
from diagonal.search import (
    SOLVED,
    SearchTask,
    cubic_form_search,
    exact_cbrt,
    exact_sqrt,
    mod3_obstruction,
    run_task,
    selmer_check,
    sextic_search,
    surface_search,
    survey_small_coefficients,
)


def test_exact_roots():
    assert exact_sqrt(16) == 4
    assert exact_sqrt(15) is None
    assert exact_sqrt(-1) is None
    assert exact_cbrt(-27) == -3
    assert exact_cbrt(26) is None


def test_sextic_search_small_bound_is_empty():
    assert sextic_search(20, workers=2) == []
    assert sextic_search(2) == []


@pytest.mark.slow
def test_sextic_search_finds_known_solution():
    assert sextic_search(200) == [(28, 44, 57, 162967)]
    assert 57 ** 6 - 28 ** 6 - 44 ** 6 == 162967 ** 2


def test_surface_search_is_weighted_primitive():
    # (8, 2, 2, 2) solves x^2 + y^6 = z^6 + w^6 but 2 | y, z, w and 8 | x
    hits = surface_search(1, 1, 1, 1, 2, workers=2)
    assert hits == [(1, 1, 1, 1), (1, 2, 1, 2), (1, 2, 2, 1), (8, 1, 1, 2), (8, 1, 2, 1)]


def test_surface_search_validation():
    with pytest.raises(ValidationError):
        surface_search(1, 0, 1, 1, 2)
    with pytest.raises(ValidationError):
        surface_search(1, 1, 1, 1, 0)


def test_cubic_form_search():
    assert cubic_form_search((1, 1, -2), 0, 2) == [(1, -1, 0), (1, 1, 1)]
    assert cubic_form_search((1, 1, 1), 3, 1) == [(1, 1, 1)]


def test_selmer_cubic_has_no_small_points():
    assert selmer_check(10) == []


def test_mod3_obstruction():
    assert not mod3_obstruction(1, 1, 2, 2)
    assert mod3_obstruction(1, 1, 3, 3)
    # scaling by the gcd does not change the answer
    assert mod3_obstruction(3, 3, 9, 9)
    with pytest.raises(ValidationError):
        mod3_obstruction(0, 1, 1, 1)


def test_survey_small_coefficients():
    statuses = survey_small_coefficients(1, 2, workers=1)
    assert len(statuses) == 1
    assert statuses[0].coefficients == (1, 1, 1, 1)
    assert statuses[0].status == SOLVED
    assert statuses[0].witness == (1, 1, 1, 1)


def test_search_task():
    assert run_task(SearchTask("cubic", 1, (1, 1, 1), 3)) == [(1, 1, 1)]
    with pytest.raises(ValidationError, match="Unknown search kind"):
        SearchTask("quartic", 10)
    with pytest.raises(ValidationError, match="positive"):
        SearchTask("sextic", 0)


@pytest.mark.slow
def test_selmer_cubic_has_no_points_up_to_100():
    assert selmer_check(100) == []


@pytest.mark.slow
def test_surface_search_finds_pencil_point():
    hits = surface_search(1, 1, 2, 2, 100)
    assert hits
    assert (8261, 5, 18, 7) in hits
