"""
Points on a(y1^4 - f1(X)^2) = b(y2^4 - f2(X)^2) for forms f1, f2 of equal odd
degree 2m + 1.

With y1 = T^m, y2 = v T^m, X = u T the equation splits into a pair of
quadrics in U, and eliminating T leaves the quartic

    C: V^2 = (b t U^2 + 2a U + a t)(b U^2 + 2b t U + a),  t = -f2(u)/f1(u).

When t = s^2 the point (0, a s) is rational on C; taking it as the origin
gives the curve Y^2 = X^3 + 4ab(a - b s^4)^2 X, which carries the point Q
below. Every multiple kQ returns a point of the hypersurface through

    v = V / (b U^2 + 2b t U + a),  T = (a - b U v^2) / (a f1 - b f2 U).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from ..arith.rational import to_rational
from ..elliptic.quartic import QuarticTransport
from ..elliptic.weierstrass import CurvePoint, WeierstrassCurve
from ..exceptions import DegenerateLocusError, ValidationError, VerificationError
from .form import Form, ProductForm

logger = logging.getLogger(__name__)

AnyForm = Union[Form, ProductForm]


@dataclass(frozen=True)
class FormPairContext:
    """
    Inputs of the pipeline: the coefficients, the two forms, a point u with
    -f2(u)/f1(u) = s^2 and the square root s itself.
    """
    a: Fraction
    b: Fraction
    f1: AnyForm
    f2: AnyForm
    u: tuple
    s: Fraction

    def __post_init__(self):
        a, b, s = to_rational(self.a), to_rational(self.b), to_rational(self.s)
        if a == 0 or b == 0:
            raise ValidationError("Coefficients a and b must be nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "u", tuple(to_rational(c) for c in self.u))
        if self.f1.degree != self.f2.degree or self.f1.degree % 2 == 0:
            raise ValidationError(
                f"Forms need equal odd degree, got {self.f1.degree} and {self.f2.degree}"
            )
        if self.f1.variables != self.f2.variables or len(self.u) != self.f1.variables:
            raise ValidationError("Forms and point u must share the number of variables")
        if self.f1_value == 0:
            raise ValidationError(f"f1 vanishes at u = {self.u}")
        if s == 0:
            raise ValidationError("t = -f2(u)/f1(u) must be nonzero")
        if s ** 2 != self.t:
            raise ValidationError(f"s = {s} is not a square root of t = {self.t}")
        if a + b * s ** 4 == 0:
            raise DegenerateLocusError("a + b s^4 = 0: the point Q is undefined")

    @property
    def m(self) -> int:
        return (self.f1.degree - 1) // 2

    @property
    def f1_value(self) -> Fraction:
        return self.f1.evaluate(self.u)

    @property
    def f2_value(self) -> Fraction:
        return self.f2.evaluate(self.u)

    @property
    def t(self) -> Fraction:
        return -self.f2_value / self.f1_value

    def quartic_coefficients(self) -> tuple:
        """Coefficients of C in U, ascending."""
        a, b, t = self.a, self.b, self.t
        return (
            a ** 2 * t,
            2 * a * (a + b * t ** 2),
            6 * a * b * t,
            2 * b * (b * t ** 2 + a),
            b ** 2 * t,
        )

    def elliptic_curve(self) -> WeierstrassCurve:
        return pair_curve(self.a, self.b, self.s)

    def base_point(self) -> CurvePoint:
        return pair_point(self.a, self.b, self.s)


def pair_curve(a, b, s) -> WeierstrassCurve:
    """Y^2 = X^3 + 4ab(a - b s^4)^2 X."""
    a, b, s = to_rational(a), to_rational(b), to_rational(s)
    return WeierstrassCurve(4 * a * b * (a - b * s ** 4) ** 2, 0)


def pair_point(a, b, s) -> CurvePoint:
    """The point Q in terms of s; needs s != 0 and a + b s^4 != 0."""
    a, b, s = to_rational(a), to_rational(b), to_rational(s)
    s4 = s ** 4
    if s == 0 or a + b * s4 == 0:
        raise DegenerateLocusError(f"Q is undefined at s = {s}")
    k = a ** 2 - 6 * a * b * s4 + b ** 2 * s4 ** 2
    x = k ** 2 / (4 * s ** 2 * (a + b * s4) ** 2)
    y = (
        k
        * (a ** 4 + 20 * a ** 3 * b * s4 - 26 * a ** 2 * b ** 2 * s4 ** 2 + 20 * a * b ** 3 * s4 ** 3 + b ** 4 * s4 ** 4)
        / (8 * s ** 3 * (a + b * s4) ** 3)
    )
    return CurvePoint(x, y)


@dataclass(frozen=True)
class HypersurfacePoint:
    """(y1, y2, X) on a(y1^4 - f1(X)^2) = b(y2^4 - f2(X)^2)."""
    y1: Fraction
    y2: Fraction
    X: tuple
    U: Fraction
    v: Fraction
    T: Fraction


def hypersurface_residual(a, b, f1: AnyForm, f2: AnyForm, y1, y2, X: Sequence) -> Fraction:
    return a * (y1 ** 4 - f1.evaluate(X) ** 2) - b * (y2 ** 4 - f2.evaluate(X) ** 2)


def form_pair_point(ctx: FormPairContext, k: int = 1) -> HypersurfacePoint:
    """The hypersurface point coming from kQ."""
    if k < 1:
        raise ValidationError(f"Multiple k must be positive, got {k}")
    a, b, t = ctx.a, ctx.b, ctx.t
    curve = ctx.elliptic_curve()
    Q = ctx.base_point()
    curve.check(Q)

    transport = QuarticTransport(ctx.quartic_coefficients(), (0, a * ctx.s))
    if transport.curve.A != curve.A or transport.curve.B != curve.B:
        raise VerificationError(
            f"Quartic transport lands on {transport.curve}, expected {curve}",
            residual=transport.curve.A - curve.A,
        )
    kQ = curve.multiply(Q, k)
    if kQ.is_infinity:
        raise DegenerateLocusError(f"Degenerate multiple: {k}Q is the point at infinity")
    U, V = transport.from_weierstrass(kQ)

    scale = b * U ** 2 + 2 * b * t * U + a
    if scale == 0:
        raise DegenerateLocusError(f"b U^2 + 2b t U + a vanishes at U = {U}")
    v = V / scale
    denominator = a * ctx.f1_value - b * ctx.f2_value * U
    if denominator == 0:
        raise DegenerateLocusError(f"Base locus: a f1 - b f2 U = 0 at U = {U}")
    T = (a - b * U * v ** 2) / denominator
    if T == 0:
        raise DegenerateLocusError(f"T = 0 at U = {U} gives the zero point")

    m = ctx.m
    point = HypersurfacePoint(
        y1=T ** m,
        y2=v * T ** m,
        X=tuple(c * T for c in ctx.u),
        U=U,
        v=v,
        T=T,
    )
    residual = hypersurface_residual(a, b, ctx.f1, ctx.f2, point.y1, point.y2, point.X)
    if residual != 0:
        raise VerificationError(f"Point from {k}Q misses the hypersurface", residual=residual)
    logger.info(f"Hypersurface point from {k}Q: y1={point.y1}, y2={point.y2}, X={point.X}")
    return point


@dataclass(frozen=True)
class LinearFactorPoint:
    """A point (X, Y) of Y^2 = -f1(X) f2(X) for f_i = L_i F_i^2, with t = s^2."""
    X: tuple
    Y: Fraction
    context: FormPairContext


def _solving_pair(L1: tuple, L2: tuple) -> tuple:
    n = len(L1)
    for i in range(n):
        for j in range(i + 1, n):
            if L1[i] * L2[j] - L1[j] * L2[i] != 0:
                return i, j
    raise ValidationError("Linear forms L1 and L2 are dependent")


def linear_factor_parametrize(
    a, b, L1: Form, L2: Form, F1: AnyForm, F2: AnyForm, U1, U2, free: Sequence = ()
) -> LinearFactorPoint:
    """
    Solve L1(X) = U1^2, L2(X) = -U2^2 for two coordinates with the other
    n - 2 coordinates given by `free`, and put Y = U1 U2 F1(X) F2(X).
    """
    c1, c2 = L1.linear_coefficients(), L2.linear_coefficients()
    n = len(c1)
    if len(c2) != n:
        raise ValidationError("L1 and L2 must have the same number of variables")
    i, j = _solving_pair(c1, c2)
    free = [to_rational(c) for c in free]
    if len(free) != n - 2:
        raise ValidationError(f"Expected {n - 2} free coordinates, got {len(free)}")
    U1, U2 = to_rational(U1), to_rational(U2)

    others = [k for k in range(n) if k not in (i, j)]
    X = [Fraction(0)] * n
    for k, value in zip(others, free):
        X[k] = value
    r1 = U1 ** 2 - sum(c1[k] * X[k] for k in others)
    r2 = -(U2 ** 2) - sum(c2[k] * X[k] for k in others)
    det = c1[i] * c2[j] - c1[j] * c2[i]
    X[i] = (r1 * c2[j] - c1[j] * r2) / det
    X[j] = (c1[i] * r2 - r1 * c2[i]) / det
    X = tuple(X)

    f1 = ProductForm(((L1, 1), (F1, 2)))
    f2 = ProductForm(((L2, 1), (F2, 2)))
    Y = U1 * U2 * F1.evaluate(X) * F2.evaluate(X)
    if Y ** 2 != -f1.evaluate(X) * f2.evaluate(X):
        raise VerificationError("Point misses Y^2 = -f1 f2", residual=Y ** 2 + f1.evaluate(X) * f2.evaluate(X))
    F1X = F1.evaluate(X)
    if U1 == 0 or F1X == 0:
        raise DegenerateLocusError("f1 vanishes at the constructed point")
    s = U2 * F2.evaluate(X) / (U1 * F1X)
    context = FormPairContext(a, b, f1, f2, X, s)
    logger.debug(f"Linear-factor point X={X}, t={context.t}")
    return LinearFactorPoint(X=X, Y=Y, context=context)
