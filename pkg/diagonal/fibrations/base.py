"""
Shared pull-back step: a point of a fibre over Q(t) becomes a polynomial
quadruple (x, y, z, w) solving the diagonal equation.
"""

import logging
from dataclasses import replace
from typing import Callable, Sequence

from ..arith.normalize import clear_denominators, sign_canonical
from ..arith.rational import to_rational
from ..exceptions import ValidationError
from .equation import DiagonalEquation, ParametricSolution
from .verification import reduce_coprime, require_identity

logger = logging.getLogger(__name__)


def check_parameters(a, b, m: int, minimum: int = 1) -> tuple:
    a, b = to_rational(a), to_rational(b)
    if a == 0 or b == 0:
        raise ValidationError(f"a and b must be nonzero, got a={a}, b={b}")
    if not isinstance(m, int) or m < minimum:
        raise ValidationError(f"Multiple must be an integer >= {minimum}, got {m!r}")
    return a, b


def assemble_solution(
    equation: DiagonalEquation,
    point: Sequence,
    point_weights: Sequence[int],
    x_of: Callable,
    generator: str,
    multiple: int,
    sign: Callable = sign_canonical,
) -> ParametricSolution:
    """
    Args:
        point: (y, z, w) as rational functions (or polynomials) in t.
        point_weights: weights of y, z, w on the fibre.
        x_of: recovers x from polynomial (y, z, w); weighted homogeneous.
        sign: per-coordinate sign convention applied last.
    """
    y, z, w = clear_denominators(point, point_weights)
    x = x_of(y, z, w)
    sol = ParametricSolution(x, y, z, w, equation, generator=generator, multiple=multiple)
    sol = reduce_coprime(sol)
    x, y, z, w = sign(sol.quadruple)
    sol = require_identity(replace(sol, x=x, y=y, z=z, w=w))
    logger.info(
        f"Generated {generator} solution for a={equation.a}, b={equation.b}, "
        f"m={multiple}: degrees {sol.degrees}"
    )
    return sol
