"""
Diagonal equations a(x^p - y^q) = b(z^r - w^s) and polynomial solutions to them.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Optional

from ..arith.poly import Poly
from ..arith.rational import to_rational
from ..exceptions import ValidationError

logger = logging.getLogger(__name__)

STANDARD_EXPONENTS = (
    (2, 6, 6, 6),
    (2, 4, 8, 8),
    (2, 8, 4, 8),
    (2, 4, 6, 12),
    (2, 6, 4, 12),
    (2, 12, 4, 6),
    (4, 4, 4, 4),
)


def _is_lifted_2666(exponents: tuple) -> bool:
    # (2, 6n, 6, 6) produced by the t = (2b)^(n-1) T^n substitution
    p, q, r, s = exponents
    return (p, r, s) == (2, 6, 6) and q > 0 and q % 6 == 0


@dataclass(frozen=True)
class DiagonalEquation:
    """a(x^p - y^q) = b(z^r - w^s)."""
    a: Fraction
    b: Fraction
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if self.a == 0 or self.b == 0:
            raise ValidationError(f"Coefficients must be nonzero, got a={self.a}, b={self.b}")
        if len(self.exponents) != 4:
            raise ValidationError(f"Expected four exponents, got {self.exponents}")
        if self.exponents not in STANDARD_EXPONENTS and not _is_lifted_2666(self.exponents):
            raise ValidationError(f"Unsupported exponents {self.exponents}")

    @property
    def label(self) -> str:
        return "".join(str(e) for e in self.exponents)

    @property
    def weights(self) -> tuple:
        """Weights w_i with w_i * e_i constant, so the equation is weighted homogeneous."""
        L = reduce(lcm, self.exponents)
        return tuple(L // e for e in self.exponents)

    def residual(self, x, y, z, w):
        p, q, r, s = self.exponents
        return self.a * (x ** p - y ** q) - self.b * (z ** r - w ** s)

    def holds_at(self, x, y, z, w) -> bool:
        return self.residual(x, y, z, w) == 0

    def __str__(self):
        p, q, r, s = self.exponents
        return f"{self.a}(x^{p} - y^{q}) = {self.b}(z^{r} - w^{s})"


@dataclass(frozen=True)
class ParametricSolution:
    """
    Polynomial quadruple (x, y, z, w) in Q[t] claimed to satisfy `equation`.

    `generator` and `multiple` record where the quadruple came from;
    `common_factor` is the gcd of the four entries (integer content
    included) left after weighted reduction, 1 for coprime solutions.
    """
    x: Poly
    y: Poly
    z: Poly
    w: Poly
    equation: DiagonalEquation
    generator: str = "manual"
    multiple: Optional[int] = None
    common_factor: Poly = field(default_factory=lambda: Poly([1]))

    @property
    def quadruple(self) -> tuple:
        return (self.x, self.y, self.z, self.w)

    @property
    def degrees(self) -> tuple:
        return tuple(f.degree for f in self.quadruple)

    def residual(self) -> Poly:
        return self.equation.residual(*self.quadruple)

    def evaluate(self, t0) -> tuple:
        return tuple(f(t0) for f in self.quadruple)

    def is_coprime(self) -> bool:
        return self.common_factor == 1
