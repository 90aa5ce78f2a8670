"""
Height-bounded integer scans. Everything is exact: square and cube roots are
integer roots certified by r^k == n.

Scans are partitioned over the outermost variable and run on a thread pool;
partitions are merged in input order and the result is sorted, so the
output does not depend on the schedule.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt
from typing import Callable, Iterable, Optional

from sympy import factorint, integer_nthroot

from ..exceptions import ValidationError
from ..fibrations.cubic_family import unsubstituted_fibre
from ..settings import Settings

logger = logging.getLogger(__name__)

SEARCH_KINDS = ("sextic", "surface", "selmer", "cubic")


def exact_sqrt(n: int) -> Optional[int]:
    """r >= 0 with r^2 == n, or None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def exact_cbrt(n: int) -> Optional[int]:
    root, exact = integer_nthroot(abs(n), 3)
    if not exact:
        return None
    return int(root) if n >= 0 else -int(root)


def _parallel(partition: Callable, keys: Iterable, workers: Optional[int]) -> list:
    keys = list(keys)
    workers = workers or Settings.WORKERS
    with ThreadPoolExecutor(max_workers=workers) as pool:
        batches = list(pool.map(partition, keys))
    return sorted(hit for batch in batches for hit in batch)


@dataclass(frozen=True)
class SearchTask:
    """One scan: its kind, height bound and coefficients. Scans are always primitive."""
    kind: str
    bound: int
    coefficients: tuple = ()
    rhs: int = 0

    def __post_init__(self):
        if self.kind not in SEARCH_KINDS:
            raise ValidationError(f"Unknown search kind '{self.kind}', expected one of {SEARCH_KINDS}")
        if self.bound < 1:
            raise ValidationError(f"Search bound must be positive, got {self.bound}")
        if any(c == 0 for c in self.coefficients):
            raise ValidationError(f"Coefficients must be nonzero, got {self.coefficients}")


# ----------------------------------------------------------------------
# w^2 = z^6 - x^6 - y^6
# ----------------------------------------------------------------------
def sextic_search(max_sum: int, workers: Optional[int] = None) -> list:
    """
    All (x, y, z, w) with 0 < x <= y < z, x + y + z < max_sum and
    w^2 = z^6 - x^6 - y^6. The equation is symmetric in x, y.
    """
    if max_sum < 3:
        return []

    def partition(z: int) -> list:
        hits = []
        z6 = z ** 6
        for x in range(1, z):
            for y in range(x, z):
                if x + y + z >= max_sum:
                    break
                w = exact_sqrt(z6 - x ** 6 - y ** 6)
                if w is not None:
                    hits.append((x, y, z, w))
        return hits

    hits = _parallel(partition, range(2, max_sum), workers)
    logger.info(f"Sextic scan with x + y + z < {max_sum}: {len(hits)} solutions")
    return hits


# ----------------------------------------------------------------------
# a x^2 + b y^6 = c z^6 + d w^6
# ----------------------------------------------------------------------
def _weighted_primitive(x: int, y: int, z: int, w: int) -> bool:
    """No prime p with p | y, z, w and p^3 | x."""
    g = reduce(gcd, (y, z, w))
    return all(x % p ** 3 for p in factorint(g))


def surface_search(a, b, c, d, height: int, workers: Optional[int] = None) -> list:
    """
    Solutions of a x^2 + b y^6 = c z^6 + d w^6 with x y z w != 0, taken with
    positive entries, 1 <= y, z, w <= height and weighted-primitive.
    """
    if height < 1:
        raise ValidationError(f"Height must be positive, got {height}")
    if 0 in (a, b, c, d):
        raise ValidationError("Coefficients must be nonzero")
    sixth = [v ** 6 for v in range(height + 1)]

    def partition(y: int) -> list:
        hits = []
        by = b * sixth[y]
        for z in range(1, height + 1):
            cz = c * sixth[z]
            for w in range(1, height + 1):
                rest = cz + d * sixth[w] - by
                if rest % a or rest // a <= 0:
                    continue
                x = exact_sqrt(rest // a)
                if x is not None and _weighted_primitive(x, y, z, w):
                    hits.append((x, y, z, w))
        return hits

    hits = _parallel(partition, range(1, height + 1), workers)
    logger.info(f"Surface ({a},{b},{c},{d}) up to height {height}: {len(hits)} solutions")
    return hits


# ----------------------------------------------------------------------
# c1 u^3 + c2 v^3 + c3 s^3 = rhs
# ----------------------------------------------------------------------
def cubic_form_search(
    coefficients: tuple, rhs: int, height: int, workers: Optional[int] = None
) -> list:
    """
    Integer (u, v, s) in [-height, height]^3 with c1 u^3 + c2 v^3 + c3 s^3 = rhs.

    For rhs = 0 the zero triple is dropped and only primitive triples with
    first nonzero entry positive are kept.
    """
    if height < 1:
        raise ValidationError(f"Height must be positive, got {height}")
    c1, c2, c3 = coefficients
    if 0 in (c1, c2, c3):
        raise ValidationError(f"Coefficients must be nonzero, got {coefficients}")

    def partition(u: int) -> list:
        hits = []
        for v in range(-height, height + 1):
            rest = rhs - c1 * u ** 3 - c2 * v ** 3
            if rest % c3:
                continue
            s = exact_cbrt(rest // c3)
            if s is None or abs(s) > height:
                continue
            triple = (u, v, s)
            if rhs == 0:
                if not any(triple) or reduce(gcd, triple) != 1:
                    continue
                if next(e for e in triple if e) < 0:
                    continue
            hits.append(triple)
        return hits

    hits = _parallel(partition, range(-height, height + 1), workers)
    logger.info(f"Cubic {coefficients} = {rhs} up to height {height}: {len(hits)} solutions")
    return hits


def selmer_check(height: int, workers: Optional[int] = None) -> list:
    """
    Primitive points of 4y^3 + 3z^3 - 5w^3 = 0, the (2,6,6,6) fibre at
    (a, b, t) = (1, 1, 2) before t -> t^3. It is the Selmer cubic after
    w -> -w, so the list is empty at every height.
    """
    coefficients = unsubstituted_fibre(1, 1, 2)
    hits = cubic_form_search(coefficients, 0, height, workers)
    if hits:
        logger.error(f"Selmer cubic scan returned points {hits[:3]}")
    return hits


def run_task(task: SearchTask, workers: Optional[int] = None) -> list:
    if task.kind == "sextic":
        return sextic_search(task.bound, workers)
    if task.kind == "surface":
        return surface_search(*task.coefficients, task.bound, workers=workers)
    if task.kind == "selmer":
        return selmer_check(task.bound, workers)
    return cubic_form_search(task.coefficients, task.rhs, task.bound, workers)
