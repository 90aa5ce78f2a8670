"""Classification of a x^2 + b y^6 = c z^6 + d w^6 over a box of small coefficients."""

import logging
from dataclasses import dataclass
from itertools import product
from math import isqrt
from typing import Optional

from .congruence import mod3_obstruction
from .scans import surface_search

logger = logging.getLogger(__name__)

OBSTRUCTED = "obstructed"
SOLVED = "solved"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class CoefficientStatus:
    coefficients: tuple
    status: str
    witness: Optional[tuple] = None


def _square(n: int) -> bool:
    return isqrt(n) ** 2 == n


def survey_small_coefficients(max_coeff: int, height: int, workers: Optional[int] = None) -> list:
    """
    Every (a, b, c, d) in 1..max_coeff with c <= d and abcd a square, marked
    obstructed modulo 3, solved with the smallest solution found up to
    `height`, or unresolved.
    """
    results = []
    for a, b, c, d in product(range(1, max_coeff + 1), repeat=4):
        if c > d or not _square(a * b * c * d):
            continue
        if mod3_obstruction(a, b, c, d):
            results.append(CoefficientStatus((a, b, c, d), OBSTRUCTED))
            continue
        hits = surface_search(a, b, c, d, height, workers)
        if hits:
            witness = min(hits, key=lambda h: (max(h[1:]), h))
            results.append(CoefficientStatus((a, b, c, d), SOLVED, witness))
        else:
            logger.warning(f"({a},{b},{c},{d}) unresolved up to height {height}")
            results.append(CoefficientStatus((a, b, c, d), UNRESOLVED))
    return results
