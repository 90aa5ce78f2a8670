"""
Division polynomials psi_2, psi_3, psi_4 of y^2 = x^3 + A x + B as polynomials in x.

psi_2 is taken as x^3 + A x + B (the square-free part of psi_2^2 / 4) and
psi_4 is returned divided by psi_2, so each vanishes exactly at the points
of order dividing n that are not killed by a smaller factor.
"""

import logging
from dataclasses import dataclass
from typing import Any

from ..exceptions import ValidationError
from .weierstrass import WeierstrassCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivisionPolynomial:
    """Polynomial in x with coefficients in the curve's field, ascending."""
    n: int
    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: Any):
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc * x + c
        return acc


def division_polynomial(curve: WeierstrassCurve, n: int) -> DivisionPolynomial:
    """psi_n for n in {2, 3, 4}."""
    A, B = curve.A, curve.B
    if n == 2:
        coefficients = (B, A, 0, 1)
    elif n == 3:
        coefficients = (-A ** 2, 12 * B, 6 * A, 0, 3)
    elif n == 4:
        # psi_4 / psi_2
        coefficients = (
            -2 * A ** 3 - 16 * B ** 2,
            -8 * A * B,
            -10 * A ** 2,
            40 * B,
            10 * A,
            0,
            2,
        )
    else:
        raise ValidationError(f"Division polynomials are provided for n in (2, 3, 4), got {n}")
    return DivisionPolynomial(n, coefficients)
