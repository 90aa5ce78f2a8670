from fractions import Fraction

import pytest

from diagonal.exceptions import DegenerateLocusError, ValidationError
from diagonal.forms import (
    Form,
    FormPairContext,
    cone_lift,
    cone_residual,
    del_pezzo_point,
    del_pezzo_residual,
    form_pair_point,
    hypersurface_residual,
    line_construction_map,
    linear_factor_parametrize,
    parse_form,
    unirational_map,
)
from diagonal.forms.pipeline import pair_curve, pair_point


def test_parse_form():
    form = parse_form("3 : 2 1\n-1/2 : 0, 3  # cubic\n")
    assert form.degree == 3
    assert form.variables == 2
    assert form(1, 2) == 2


def test_parse_form_errors():
    with pytest.raises(ValidationError, match="not homogeneous"):
        parse_form("1 : 1 0\n1 : 2 0")
    with pytest.raises(ValidationError, match="expected 'coefficient : exponents'"):
        parse_form("1 1 0")
    with pytest.raises(ValidationError, match="nonzero term"):
        parse_form("0 : 1 0")


def test_pair_point_lies_on_pair_curve():
    assert pair_curve(1, 1, 2).contains(pair_point(1, 1, 2))
    with pytest.raises(DegenerateLocusError):
        pair_point(1, 1, 0)


def test_form_pair_smoke(linear_pair):
    f1, f2 = linear_pair
    ctx = FormPairContext(a=1, b=1, f1=f1, f2=f2, u=(1, 4), s=2)
    assert ctx.t == 4
    assert ctx.m == 0
    point = form_pair_point(ctx, 1)
    assert point.y1 == 1
    assert point.X == (point.T, 4 * point.T)
    assert hypersurface_residual(1, 1, f1, f2, point.y1, point.y2, point.X) == 0


def test_form_pair_context_validation(linear_pair):
    f1, f2 = linear_pair
    with pytest.raises(ValidationError, match="not a square root"):
        FormPairContext(a=1, b=1, f1=f1, f2=f2, u=(1, 4), s=3)
    with pytest.raises(ValidationError, match="equal odd degree"):
        FormPairContext(a=1, b=1, f1=Form.monomial((2, 0)), f2=f2, u=(1, 4), s=2)
    with pytest.raises(DegenerateLocusError):
        FormPairContext(a=-16, b=1, f1=f1, f2=f2, u=(1, 4), s=2)


def test_form_pair_rejects_zero_multiple(linear_pair):
    f1, f2 = linear_pair
    ctx = FormPairContext(a=1, b=1, f1=f1, f2=f2, u=(1, 4), s=2)
    with pytest.raises(ValidationError):
        form_pair_point(ctx, 0)


def test_linear_factor_parametrize():
    one = Form.monomial((0, 0))
    result = linear_factor_parametrize(
        1, 1, Form.linear((1, 0)), Form.linear((0, 1)), one, one, 1, 2
    )
    assert result.X == (1, -4)
    assert result.Y == 2
    assert result.context.t == 4


def test_unirational_map_point():
    p, q, r = unirational_map(1, 1, 2, 1)
    assert (p, q, r) == (Fraction(-7, 9), Fraction(16, 9), Fraction(88, 27))
    assert del_pezzo_residual(1, 1, p, q, r) == 0


def test_unirational_map_degenerate():
    # b u^2 (u^2 - 2v^2) + a = 0
    with pytest.raises(DegenerateLocusError):
        unirational_map(1, 1, 1, 1)


def test_line_construction():
    p, q, r = line_construction_map(1, 1, 2, 1)
    assert (p, q, r) == (Fraction(7, 9), Fraction(16, 9), Fraction(88, 27))


def test_del_pezzo_point_prefers_closed_form():
    assert del_pezzo_point(1, 1, 2, 1)[0] == Fraction(-7, 9)


def test_cone_lift():
    f1, f2 = Form.linear((1, 0)), Form.monomial((3, 0))
    point = (Fraction(7, 9), Fraction(16, 9), Fraction(88, 27))
    lifted = cone_lift(1, 1, f1, f2, (0,), point)
    assert lifted.X == (Fraction(88, 27), 0)
    assert cone_residual(1, 1, f1, f2, lifted.y1, lifted.y2, lifted.X) == 0


def test_cone_lift_vertex_and_degrees():
    f1 = Form.linear((1, 0))
    with pytest.raises(DegenerateLocusError, match="vertex"):
        cone_lift(1, 1, f1, Form.monomial((3, 0)), (1,), (1, 0, 0))
    with pytest.raises(ValidationError, match="deg f2"):
        cone_lift(1, 1, f1, Form.monomial((2, 0)), (1,), (1, 0, 0))
    with pytest.raises(ValidationError, match="not on"):
        cone_lift(1, 1, f1, Form.monomial((3, 0)), (1,), (1, 1, 0))
