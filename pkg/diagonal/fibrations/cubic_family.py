"""
The (2,6,6,6) fibration and its (2,6n,6,6) lift.

Setting x = y^3 + t^3(z^3 - w^3) in a(x^2 - y^6) = b(z^6 - w^6) and
dividing by z^3 - w^3 leaves the diagonal plane cubic

    2at^3 y^3 + (at^6 - b) z^3 - (at^6 + b) w^3 = 0

with the rational point P = (t, -1, 1). The group law is run on the cubic
itself with origin P; the generator is the tangent point P*P.
"""

import logging
from functools import reduce
from math import gcd, lcm

from ..arith.poly import T, Poly
from ..arith.rational import to_rational
from ..elliptic.plane_cubic import DiagonalCubic
from ..exceptions import ValidationError
from .base import assemble_solution, check_parameters
from .equation import DiagonalEquation, ParametricSolution
from .verification import common_factor, require_identity

logger = logging.getLogger(__name__)


def fibre_2666(a, b) -> tuple:
    """The cubic over Q[t], its origin P and the generator P*P."""
    a, b = to_rational(a), to_rational(b)
    t3, t6 = T ** 3, T ** 6
    cubic = DiagonalCubic((2 * a * t3, a * t6 - b, -(a * t6 + b)))
    origin = (T, -1, 1)
    cubic.check(origin)
    return cubic, origin, cubic.tangent_point(origin)


def gen_2666(a, b, m: int = 1) -> ParametricSolution:
    """m-th multiple of P*P on the (2,6,6,6) fibre, pulled back to (x, y, z, w)."""
    a, b = check_parameters(a, b, m)
    cubic, origin, generator = fibre_2666(a, b)
    point = cubic.multiply(generator, m, origin)
    equation = DiagonalEquation(a, b, (2, 6, 6, 6))
    return assemble_solution(
        equation,
        point,
        (1, 1, 1),
        lambda y, z, w: y ** 3 + T ** 3 * (z ** 3 - w ** 3),
        generator="2666",
        multiple=m,
    )


def unsubstituted_fibre(a, b, t0) -> tuple:
    """
    Integer coefficients of 2at y^3 + (at^2 - b) z^3 - (at^2 + b) w^3 at t = t0,
    the (2,6,6,6) fibre before t is replaced by t^3.
    """
    a, b, t0 = to_rational(a), to_rational(b), to_rational(t0)
    coefficients = [2 * a * t0, a * t0 ** 2 - b, -(a * t0 ** 2 + b)]
    if any(c == 0 for c in coefficients):
        raise ValidationError(f"Fibre at t = {t0} is not a smooth diagonal cubic")
    den = reduce(lcm, [c.denominator for c in coefficients])
    ints = [int(c * den) for c in coefficients]
    g = reduce(gcd, ints)
    return tuple(i // g for i in ints)


def cor2_solution(a, n: int = 1, b=1) -> ParametricSolution:
    """
    Solution of a(x^2 - y^(6n)) = b(z^6 - w^6) in T from the m = 1 solution
    of the (2,6,6,6) family under t = (2b)^(n-1) T^n, which makes y = (2bT)^n.

    Coprimality is claimed for b = 1 only; otherwise the common integer
    factor is left in place and reported.
    """
    a, b = check_parameters(a, b, n)
    scale = (2 * b) ** (n - 1)
    t = Poly.monomial(scale, n)
    x = 2 * b * t ** 3 * (27 * a ** 2 * t ** 12 + 5 * b ** 2)
    y = Poly.monomial(2 * b, 1)
    z = 3 * a * t ** 6 + b
    w = 3 * a * t ** 6 - b
    equation = DiagonalEquation(a, b, (2, 6 * n, 6, 6))
    sol = ParametricSolution(x, y, z, w, equation, generator="cor2", multiple=n)
    factor = common_factor(sol.quadruple)
    if factor != 1:
        logger.warning(f"Substitution t = (2b)^(n-1) T^n with b={b} keeps the common factor {factor}")
    sol = ParametricSolution(x, y, z, w, equation, "cor2", n, factor)
    return require_identity(sol)
