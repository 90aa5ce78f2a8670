"""Rational curves on x^4 - y^4 = 4(z^4 - w^4) of degree 3 and 7."""

import logging
from dataclasses import dataclass

from ..arith.poly import Poly
from ..arith.rational import to_rational
from ..exceptions import ValidationError, VerificationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceParametrization:
    x: Poly
    y: Poly
    z: Poly
    w: Poly
    h: object = 4

    @property
    def degree(self) -> int:
        return max(f.degree for f in (self.x, self.y, self.z, self.w))

    def residual(self) -> Poly:
        h = to_rational(self.h)
        return self.x ** 4 - self.y ** 4 - h * (self.z ** 4 - self.w ** 4)

    def evaluate(self, t0) -> tuple:
        return tuple(f(t0) for f in (self.x, self.y, self.z, self.w))


DEGREE3 = SurfaceParametrization(
    x=Poly([4, -2, 4, 1]),
    y=Poly([4, 2, 4, -1]),
    z=Poly([2, -4, -1, -1]),
    w=Poly([2, 4, -1, 1]),
)

DEGREE7 = SurfaceParametrization(
    x=Poly([-64, -24, -24, 132, -144, 138, -22, 9]),
    y=Poly([-96, 8, -24, -252, 168, -78, 42, -7]),
    z=Poly([-56, 168, -156, 168, -126, -6, 1, -6]),
    w=Poly([-72, 88, -276, 144, -66, 6, 3, 4]),
)

H4_PARAMETRIZATIONS = {"degree3": DEGREE3, "degree7": DEGREE7}


def verify_h4_parametrization(which: str) -> bool:
    """Substitute the stored quadruple and require the zero polynomial."""
    try:
        curve = H4_PARAMETRIZATIONS[which]
    except KeyError:
        raise ValidationError(
            f"Unknown parametrization '{which}', expected one of {sorted(H4_PARAMETRIZATIONS)}"
        )
    residual = curve.residual()
    if not residual.is_zero():
        raise VerificationError(f"The {which} curve leaves residual {residual}", residual=residual)
    logger.info(f"Verified the {which} curve on x^4 - y^4 = 4(z^4 - w^4)")
    return True
