"""
The hyperplane x - y = theta(z - w), theta^4 = h, through two lines of
x^4 - y^4 = theta^4 (z^4 - w^4).

Eliminating w leaves a quartic in x, y, z that splits as two lines times
the residual conic. theta stays a formal symbol unless a value is given.
"""

import logging

from sympy import Symbol, cancel, expand, symbols

from ..exceptions import VerificationError

logger = logging.getLogger(__name__)

x, y, z = symbols("x y z")
THETA = Symbol("theta")


def residual_conic(theta=THETA):
    return x ** 2 - x * y + 2 * y ** 2 - theta * x * z + 3 * theta * y * z + 2 * theta ** 2 * z ** 2


def hyperplane_section(theta=THETA):
    """x^4 - y^4 - theta^4(z^4 - w^4) with theta w = theta z - x + y."""
    return expand(x ** 4 - y ** 4 - theta ** 4 * z ** 4 + (theta * z - x + y) ** 4)


def verify_hyperplane_conic(theta=THETA) -> bool:
    """Require section = c (x - y)(x - theta z) conic for a nonzero constant c."""
    section = hyperplane_section(theta)
    lines = (x - y) * (x - theta * z)
    quotient = cancel(section / (lines * residual_conic(theta)))
    if quotient.free_symbols & {x, y, z} or quotient == 0:
        raise VerificationError(
            f"Hyperplane section does not split as two lines and the conic: quotient {quotient}",
            residual=quotient,
        )
    logger.info(f"Hyperplane section splits with constant {quotient} (theta = {theta})")
    return True
