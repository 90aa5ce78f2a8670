"""
Exact checks and normal forms for parametric solutions.
"""

import logging
from dataclasses import dataclass, replace
from functools import reduce
from math import gcd

from ..arith.normalize import remove_weighted_factors, weighted_integer_normalize
from ..arith.poly import Poly, poly_gcd_list
from ..arith.ratfunc import RatFunc
from ..exceptions import ValidationError, VerificationError
from .equation import DiagonalEquation, ParametricSolution

logger = logging.getLogger(__name__)


def verify_identity(sol: ParametricSolution) -> bool:
    """True iff a(x^p - y^q) - b(z^r - w^s) is the zero polynomial."""
    return sol.residual().is_zero()


def require_identity(sol: ParametricSolution) -> ParametricSolution:
    residual = sol.residual()
    if not residual.is_zero():
        raise VerificationError(
            f"{sol.generator} output does not satisfy {sol.equation}", residual=residual
        )
    return sol


def is_trivial(sol: ParametricSolution) -> bool:
    """
    True when both sides vanish term by term: x^p = y^q with z^r = w^s, or
    one of the cross pairings a x^p = b z^r, a y^q = b w^s and
    a x^p = -b w^s, a y^q = -b z^r.
    """
    a, b = sol.equation.a, sol.equation.b
    p, q, r, s = sol.equation.exponents
    X, Y, Z, W = sol.x ** p, sol.y ** q, sol.z ** r, sol.w ** s
    pairings = (
        (X - Y, Z - W),
        (a * X - b * Z, a * Y - b * W),
        (a * X + b * W, a * Y + b * Z),
    )
    return any(first.is_zero() and second.is_zero() for first, second in pairings)


def common_factor(polys) -> Poly:
    """Primitive integer gcd of the entries times the gcd of their integer contents."""
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        return Poly()
    g = poly_gcd_list(nonzero)
    g = g.scale(1 / g.integer_content())
    contents = [f.integer_content() for f in nonzero]
    if all(c.denominator == 1 for c in contents):
        return g * reduce(gcd, [c.numerator for c in contents])
    return g


def reduce_coprime(sol: ParametricSolution) -> ParametricSolution:
    """
    Strip every factor F with F^(w_i) | x_i for the weights of the equation,
    then rescale to integral coefficients with no removable integer factor.

    Factors that do not divide with the full weights stay in place and are
    recorded in `common_factor`.
    """
    weights = sol.equation.weights
    reduced, removed = remove_weighted_factors(list(sol.quadruple), weights)
    if removed.degree > 0:
        logger.debug(f"Removed weighted factor {removed} from {sol.generator} output")
    normalized, _ = weighted_integer_normalize(reduced, weights)
    x, y, z, w = normalized
    leftover = common_factor(normalized)
    if leftover != 1:
        logger.info(f"{sol.generator} output keeps the common factor {leftover}")
    return replace(sol, x=x, y=y, z=z, w=w, common_factor=leftover)


# ----------------------------------------------------------------------
# Dehomogenization
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class AffineCurve:
    """
    A rational curve on the affine surface obtained by setting one weight-1
    coordinate of a solution to 1.
    """
    coordinates: tuple
    equation: DiagonalEquation
    fixed_index: int

    def residual(self) -> RatFunc:
        return self.equation.residual(*self.coordinates)

    def verify(self) -> bool:
        return self.residual().is_zero()

    def describe(self) -> str:
        names = "xyzw"
        p, q, r, s = self.equation.exponents
        terms = [f"{names[0]}^{p}", f"{names[1]}^{q}", f"{names[2]}^{r}", f"{names[3]}^{s}"]
        terms[self.fixed_index] = "1"
        return f"{self.equation.a}({terms[0]} - {terms[1]}) = {self.equation.b}({terms[2]} - {terms[3]})"


def dehomogenize(sol: ParametricSolution) -> AffineCurve:
    """Divide by the weight-1 coordinate (w when possible) with the weighted powers."""
    weights = sol.equation.weights
    candidates = [i for i, wt in enumerate(weights) if wt == 1]
    if not candidates:
        raise ValidationError(f"{sol.equation} has no coordinate of weight 1")
    index = candidates[-1]
    pivot = sol.quadruple[index]
    if pivot.is_zero():
        raise ValidationError("Cannot dehomogenize by a zero coordinate")
    pivot = RatFunc(pivot)
    coordinates = tuple(
        RatFunc(f) / pivot ** wt for f, wt in zip(sol.quadruple, weights)
    )
    curve = AffineCurve(coordinates, sol.equation, index)
    if not curve.verify():
        raise VerificationError(f"Dehomogenized curve leaves {curve.describe()}")
    return curve
