from fractions import Fraction

import pytest

from diagonal.arith import (
    T,
    Poly,
    RatFunc,
    clear_denominators,
    format_rational,
    integer_normalize,
    parse_rational_list,
    poly_gcd,
    rational_to_json,
    remove_weighted_factors,
    sign_canonical,
    to_rational,
    weighted_integer_normalize,
)
from diagonal.exceptions import ValidationError


def test_to_rational_accepts_ints_fractions_and_strings():
    assert to_rational(3) == 3
    assert to_rational(Fraction(1, 2)) == Fraction(1, 2)
    assert to_rational(" -7/14 ") == Fraction(-1, 2)


def test_to_rational_rejects_floats_and_bools():
    with pytest.raises(ValidationError, match="Not a rational"):
        to_rational(0.5)
    with pytest.raises(ValidationError):
        to_rational(True)


def test_to_rational_rejects_bad_literals():
    with pytest.raises(ValidationError, match="Invalid rational literal"):
        to_rational("1/0")


def test_rational_text_forms():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert rational_to_json(Fraction(4, 2)) == 2
    assert rational_to_json(Fraction(1, 3)) == "1/3"
    assert parse_rational_list("1,1/2, -3") == [1, Fraction(1, 2), -3]


def test_parse_rational_list_empty():
    with pytest.raises(ValidationError, match="Empty rational list"):
        parse_rational_list(" , ")


def test_poly_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0]).is_zero()
    assert Poly().degree == -1


def test_poly_ring_operations():
    f = Poly([1, 1])
    g = Poly([-1, 1])
    assert f * g == Poly([-1, 0, 1])
    assert f + g == Poly([0, 2])
    assert f - g == 2
    assert f ** 3 == Poly([1, 3, 3, 1])
    assert 2 * f == Poly([2, 2])


def test_poly_evaluation_and_structure():
    f = Poly([4, -2, 4, 1])
    assert f(1) == 7
    assert f("1/2") == Fraction(4 - 1 + 1) + Fraction(1, 8)
    assert f.lc == 1
    assert f.tc == 4
    assert Poly.monomial(3, 5).valuation() == 5


def test_poly_division():
    f = Poly([-1, 0, 1])
    q, r = divmod(f, Poly([-1, 1]))
    assert q == Poly([1, 1])
    assert r.is_zero()
    assert f.exact_div(Poly([1, 1])) == Poly([-1, 1])
    with pytest.raises(ValidationError, match="does not divide"):
        f.exact_div(Poly([2, 1]))


def test_poly_shift():
    f = Poly.monomial(1, 3) + Poly.monomial(2, 5)
    assert f.shift(-3) == Poly([1, 0, 2])
    assert f.shift(2) == Poly.monomial(1, 5) + Poly.monomial(2, 7)
    with pytest.raises(ValidationError):
        f.shift(-4)


def test_poly_gcd_is_monic():
    f = Poly([-2, 0, 2])
    g = Poly([2, 2])
    assert poly_gcd(f, g) == Poly([1, 1])


def test_poly_str():
    assert str(Poly([-1, 0, 3])) == "3*t^2 - 1"
    assert str(Poly()) == "0"


def test_integer_normalize_fixes_sign_and_content():
    normalized, c = integer_normalize([Poly([Fraction(-1, 2), Fraction(-3, 2)]), Poly([1])])
    assert normalized == [Poly([1, 3]), Poly([-2])]
    assert c == Fraction(-1, 2)


def test_integer_normalize_rejects_zero():
    with pytest.raises(ValidationError):
        integer_normalize([Poly(), Poly()])


def test_ratfunc_lowest_terms():
    r = RatFunc(Poly([-1, 0, 1]), Poly([2, 2]))
    assert r.num == Poly([Fraction(-1, 2), Fraction(1, 2)])
    assert r.den == 1
    assert r.is_polynomial()


def test_ratfunc_field_operations():
    r = RatFunc(1, T)
    assert r * T == 1
    assert (1 / r) == RatFunc(T)
    assert (r + r)(2) == 1
    with pytest.raises(ZeroDivisionError):
        r(0)


def test_clear_denominators_uses_weights():
    values = [RatFunc(1, T), RatFunc(1, T ** 2)]
    cleared = clear_denominators(values, (1, 1))
    assert cleared == [T, Poly([1])]


def test_remove_weighted_factors():
    values = [T ** 3 * Poly([1, 1]), T * Poly([2])]
    reduced, removed = remove_weighted_factors(values, (3, 1))
    assert removed == T
    assert reduced == [Poly([1, 1]), Poly([2])]


def test_weighted_integer_normalize_clears_prime_powers():
    values = [Poly([8]), Poly([2])]
    normalized, lam = weighted_integer_normalize(values, (3, 1))
    assert lam == Fraction(1, 2)
    assert normalized == [Poly([1]), Poly([1])]


def test_sign_canonical():
    assert sign_canonical([Poly([1, -1]), Poly([2])]) == [Poly([-1, 1]), Poly([2])]
