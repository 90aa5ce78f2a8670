"""
The (2,4,8,8) and (2,8,4,8) fibrations, whose fibres are quartics
v^2 = alpha u^4 + beta with alpha + beta = gamma^2 over Q(t).

(2,4,8,8): x = -y^2 + t^2(z^4 + w^4) gives

    2at^2 y^2 = (at^4 - b) z^4 + (at^4 + b) w^4,

read in u = z/w, v = y/w^2 with gamma = t.

(2,8,4,8): x = -y^4 + t^4(z^2 + w^4) gives

    (b - at^8) z^2 = (b + at^8) w^4 - 2at^4 y^4,

read in u = y/(t w), v = z/w^2 with gamma = 1.

In both cases the origin is the image of (y, z, w) = (t, 1, 1) and the
generator the image of (-t, 1, 1). The first multiple is a trivial solution.
"""

import logging

from ..arith.normalize import constant_sign_canonical
from ..arith.poly import T
from ..arith.ratfunc import RatFunc
from ..elliptic.quartic import QuarticCurve
from .base import assemble_solution, check_parameters
from .equation import DiagonalEquation, ParametricSolution

logger = logging.getLogger(__name__)


def fibre_2488(a, b) -> tuple:
    """(curve, origin, generator) for the (2,4,8,8) fibre."""
    t = RatFunc(T)
    two_at2 = 2 * a * t ** 2
    curve = QuarticCurve(
        alpha=(a * t ** 4 - b) / two_at2,
        beta=(a * t ** 4 + b) / two_at2,
        gamma=t,
    )
    return curve, (1, t), (1, -t)


def fibre_2848(a, b) -> tuple:
    """(curve, origin, generator) for the (2,8,4,8) fibre."""
    t8 = RatFunc(T ** 8)
    den = b - a * t8
    curve = QuarticCurve(alpha=-2 * a * t8 / den, beta=(b + a * t8) / den, gamma=1)
    return curve, (1, 1), (-1, 1)


def _warn_trivial(family: str, m: int) -> None:
    if m == 1:
        logger.warning(f"The first multiple of the {family} generator gives a trivial solution")


def gen_2488(a, b, m: int = 2) -> ParametricSolution:
    """m-th multiple of the generator on the (2,4,8,8) fibre."""
    a, b = check_parameters(a, b, m)
    _warn_trivial("2488", m)
    curve, origin, generator = fibre_2488(a, b)
    u, v = curve.multiply(generator, m, origin)
    return assemble_solution(
        DiagonalEquation(a, b, (2, 4, 8, 8)),
        (v, u, 1),
        (2, 1, 1),
        lambda y, z, w: -y ** 2 + T ** 2 * (z ** 4 + w ** 4),
        generator="2488",
        multiple=m,
        sign=constant_sign_canonical,
    )


def gen_2848(a, b, m: int = 2) -> ParametricSolution:
    """m-th multiple of the generator on the (2,8,4,8) fibre."""
    a, b = check_parameters(a, b, m)
    _warn_trivial("2848", m)
    curve, origin, generator = fibre_2848(a, b)
    u, v = curve.multiply(generator, m, origin)
    return assemble_solution(
        DiagonalEquation(a, b, (2, 8, 4, 8)),
        (RatFunc(T) * u, v, 1),
        (1, 2, 1),
        lambda y, z, w: -y ** 4 + T ** 4 * (z ** 2 + w ** 4),
        generator="2848",
        multiple=m,
        sign=constant_sign_canonical,
    )
