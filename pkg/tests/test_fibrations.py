import random
from dataclasses import replace

import pytest

from diagonal.arith import Poly, poly_eval, poly_gcd_list, weighted_integer_normalize
from diagonal.exceptions import ValidationError, VerificationError
from diagonal.fibrations import (
    GENERATORS,
    DiagonalEquation,
    ParametricSolution,
    cor2_solution,
    dehomogenize,
    duplication_steps_24612,
    gen_2488,
    gen_24612,
    gen_26412,
    gen_2666,
    gen_2848,
    generate,
    is_trivial,
    require_identity,
    unsubstituted_fibre,
    verify_identity,
)
from diagonal.reporting.checks import DISPLAY_SAMPLES, PUBLISHED_DISPLAYS, weighted_match


@pytest.fixture
def special_solution(t):
    """x = 2t^3(27t^12 + 5), y = 2t, z = 3t^6 + 1, w = 3t^6 - 1."""
    return (
        2 * t ** 3 * (27 * t ** 12 + 5),
        2 * t,
        3 * t ** 6 + 1,
        3 * t ** 6 - 1,
    )


def test_equation_validation():
    with pytest.raises(ValidationError, match="nonzero"):
        DiagonalEquation(0, 1, (2, 6, 6, 6))
    with pytest.raises(ValidationError, match="Unsupported exponents"):
        DiagonalEquation(1, 1, (2, 2, 2, 2))
    with pytest.raises(ValidationError, match="four exponents"):
        DiagonalEquation(1, 1, (2, 6, 6))


def test_equation_weights_and_label():
    eq = DiagonalEquation(1, "1/2", (2, 6, 6, 6))
    assert eq.weights == (3, 1, 1, 1)
    assert eq.label == "2666"
    assert DiagonalEquation(1, 1, (2, 4, 6, 12)).weights == (6, 3, 2, 1)
    # (2, 6n, 6, 6) is accepted for the lifted family
    assert DiagonalEquation(1, 1, (2, 12, 6, 6)).label == "21266"


def test_equation_holds_at_integer_point():
    eq = DiagonalEquation(1, 1, (2, 6, 6, 6))
    assert eq.holds_at(64, 2, 4, 2)
    assert not eq.holds_at(64, 2, 4, 3)


def test_gen_2666_first_multiple(special_solution):
    sol = gen_2666(1, 1, 1)
    assert verify_identity(sol)
    assert not is_trivial(sol)
    assert sol.degrees == (15, 1, 6, 6)
    for got, expected in zip(sol.quadruple, special_solution):
        assert got == expected or got == -expected


def test_gen_2666_value_at_one():
    x, y, z, w = gen_2666(1, 1, 1).evaluate(1)
    assert x ** 2 - y ** 6 == 4032
    assert z ** 6 - w ** 6 == 4032


def test_gen_2666_rejects_bad_multiple():
    with pytest.raises(ValidationError, match="Multiple"):
        gen_2666(1, 1, 0)


def test_cor2_matches_special_solution(special_solution):
    sol = cor2_solution(1, 1, 1)
    assert sol.quadruple == special_solution
    assert sol.is_coprime()
    assert sol.generator == "cor2"


def test_cor2_lift_exponents():
    sol = cor2_solution(1, 2, 1)
    assert sol.equation.exponents == (2, 12, 6, 6)
    assert verify_identity(sol)


@pytest.mark.parametrize("family", sorted(GENERATORS))
def test_every_generator_is_a_nontrivial_identity(family):
    sol = GENERATORS[family](1, 1)
    assert verify_identity(sol)
    assert not is_trivial(sol)
    assert sol.generator == family


def test_is_trivial_on_pure_powers(t):
    one = Poly([1])
    sol = ParametricSolution(t ** 3, t, one, one, DiagonalEquation(1, 1, (2, 6, 6, 6)))
    assert verify_identity(sol)
    assert is_trivial(sol)


def test_require_identity_reports_residual():
    sol = gen_2666(1, 1, 1)
    broken = replace(sol, x=sol.x + 1)
    assert not verify_identity(broken)
    with pytest.raises(VerificationError) as excinfo:
        require_identity(broken)
    assert not excinfo.value.residual.is_zero()


def test_unsubstituted_fibre():
    assert unsubstituted_fibre(1, 1, 2) == (4, 3, -5)
    with pytest.raises(ValidationError):
        unsubstituted_fibre(1, 1, 0)


def test_duplication_steps():
    steps = duplication_steps_24612(1, 1, 2)
    assert [s.index for s in steps] == [1, 2]
    assert steps[1].source == steps[0].point


def test_dehomogenize_fixes_w():
    curve = dehomogenize(gen_2666(1, 1, 1))
    assert curve.fixed_index == 3
    assert curve.verify()
    assert curve.describe().endswith("- 1)")


def test_generate_registry():
    assert generate("cor2", 1, 1, 1).equation.exponents == (2, 6, 6, 6)
    with pytest.raises(ValidationError, match="no fibration generator"):
        generate("4444", 1, 1, 1)
    with pytest.raises(ValidationError, match="Unknown family"):
        generate("999", 1, 1, 1)


@pytest.mark.parametrize("m", [2, 3])
def test_gen_2488_constant_terms_agree(m):
    sol = gen_2488(1, 1, m)
    assert poly_eval(sol.z, 0) == poly_eval(sol.w, 0) == 1


@pytest.mark.parametrize("a, b, expected", [(1, 2, 2), (2, 3, 9)])
def test_gen_2488_constant_terms_after_normalization(a, b, expected):
    # z and w agree mod t; an even b loses one factor 2 to the weighted normal form
    sol = gen_2488(a, b, 2)
    assert poly_eval(sol.z, 0) == poly_eval(sol.w, 0) == expected


def test_gen_2848_constant_terms():
    sol = gen_2848(2, -5, 2)
    z0, w0 = poly_eval(sol.z, 0), poly_eval(sol.w, 0)
    assert (z0, w0) == (625, 25)
    assert z0 == w0 ** 2


@pytest.mark.parametrize("a, b", DISPLAY_SAMPLES)
@pytest.mark.parametrize("family", sorted(PUBLISHED_DISPLAYS))
def test_published_displays(family, a, b):
    generator, multiple, display = PUBLISHED_DISPLAYS[family]
    assert weighted_match(generator(a, b, multiple), display(a, b))


def test_weighted_match_rejects_other_multiple():
    generator, _, display = PUBLISHED_DISPLAYS["2488"]
    assert not weighted_match(generator(1, 1, 3), display(1, 1))


def test_gen_26412_common_factor_is_primitive():
    sol = gen_26412(2, 3, 2)
    assert sol.common_factor == Poly.monomial(2, 12) - 3
    assert not sol.is_coprime()


@pytest.mark.parametrize("a, b", DISPLAY_SAMPLES)
def test_duplication_congruence(a, b):
    A = Poly.monomial(a, 12) - b
    for step in duplication_steps_24612(a, b, 3):
        y_prev = step.source[2]
        assert A.divides(step.raw[2] - 64 * a ** 2 * b * y_prev ** 4)


def _assert_step_valuations(steps):
    for step in steps:
        z, w, y = step.point
        assert (z.valuation(), w.valuation(), y.valuation()) == (2, 7, 0)


def test_duplication_valuations():
    _assert_step_valuations(duplication_steps_24612(2, 3, 3))


@pytest.mark.slow
def test_duplication_valuations_fourth_step():
    _assert_step_valuations(duplication_steps_24612(1, 1, 4))


@pytest.mark.parametrize("generator", [gen_2666, gen_2488, gen_2848, gen_24612])
def test_degrees_increase_with_multiple(generator):
    degrees = [max(generator(1, 1, m).degrees) for m in (1, 2, 3)]
    assert degrees[0] < degrees[1] < degrees[2]


@pytest.mark.slow
@pytest.mark.parametrize("generator", [gen_2666, gen_2488, gen_2848, gen_24612])
def test_random_parameters_give_coprime_solutions(generator):
    rng = random.Random(2024)
    for _ in range(10):
        a = rng.choice([c for c in range(-9, 10) if c])
        b = rng.choice([c for c in range(-9, 10) if c])
        for m in range(1, 5):
            sol = generator(a, b, m)
            assert poly_gcd_list(list(sol.quadruple)) == 1, (a, b, m)
            _, lam = weighted_integer_normalize(sol.quadruple, sol.equation.weights)
            assert lam == 1, (a, b, m)
            assert verify_identity(sol)
