"""Scanning pencil members over rational parameters of bounded height."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from ..elliptic.plane_cubic import DiagonalCubic
from ..exceptions import DegenerateLocusError, ValidationError
from ..settings import Settings
from .pencil import PencilCurve, build_pencil, cubic_point_search, verify_recovered
from .split import QuadSplit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfacePoint:
    t0: Fraction
    x: Fraction
    y: int
    z: int
    w: int


def farey_parameters(bound: int) -> list:
    """All p/q with gcd 1 and max(|p|, q) <= bound, ordered by height and then value."""
    if bound < 1:
        raise ValidationError(f"Parameter bound must be positive, got {bound}")
    values = {
        Fraction(p, q)
        for q in range(1, bound + 1)
        for p in range(-bound, bound + 1)
        if gcd(p, q) == 1
    }
    return sorted(values, key=lambda t: (max(abs(t.numerator), t.denominator), t))


def _member_points(curve: PencilCurve, t0: Fraction, height: int) -> list:
    found = []
    if not any(curve.at(t0)):
        return found
    for point in cubic_point_search(curve, t0, height).points:
        try:
            x = verify_recovered(curve, t0, point)
        except DegenerateLocusError as e:
            logger.debug(f"Skipping {point} at t = {t0}: {e}")
            continue
        found.append(SurfacePoint(t0, x, *point))
    return found


def pencil_survey(
    split: QuadSplit,
    exponents: tuple,
    bound: int,
    height: int,
    workers: Optional[int] = None,
) -> list:
    """
    Every surface point recovered from members with parameter height <= bound
    and point height <= height, in parameter order.
    """
    curve = build_pencil(split, exponents)
    parameters = farey_parameters(bound)
    workers = workers or Settings.WORKERS
    logger.info(f"Surveying {len(parameters)} pencil members with {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        batches = list(pool.map(lambda t0: _member_points(curve, t0, height), parameters))
    points = [p for batch in batches for p in batch]
    logger.info(f"Pencil survey found {len(points)} surface points")
    return points


def member_point_order(curve: PencilCurve, t0, point: tuple, bound: int = 12) -> Optional[int]:
    """
    Order of T - P on a (3,3,3) member, T the tangent point at P; None when
    it exceeds `bound`, which means P has infinite order.
    """
    if curve.exponents != (3, 3, 3):
        raise ValidationError("Point orders are computed on (3,3,3) members only")
    cubic = DiagonalCubic(curve.at(t0))
    cubic.check(point)
    tangent = cubic.tangent_point(point)
    return cubic.point_order(tangent, point, bound)
