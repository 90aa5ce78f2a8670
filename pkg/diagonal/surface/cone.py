"""
Extremal rays of rational polyhedral cones {n : c . n >= 0 for every row c}.

The double-description method runs on integer vectors only. Lines of the
starting space are consumed first; afterwards every new ray is a positive
combination of an adjacent (+, -) pair, adjacency being decided by the
combinatorial test on tight constraints.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Optional, Sequence

from sympy import Matrix

from ..exceptions import ConeError, ValidationError
from .lattice import TABLE1, bilinear

logger = logging.getLogger(__name__)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence) -> tuple:
    """Integer vector with content 1 on the same ray (rationals allowed)."""
    den = reduce(lcm, [getattr(c, "q", getattr(c, "denominator", 1)) for c in v], 1)
    ints = [int(c * den) for c in v]
    g = reduce(gcd, [abs(i) for i in ints], 0)
    if g == 0:
        raise ValidationError("The zero vector spans no ray")
    return tuple(i // g for i in ints)


@dataclass(frozen=True)
class RationalCone:
    halfspaces: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(c) for c in row) for row in self.halfspaces)
        if not rows:
            raise ValidationError("A cone needs at least one half-space")
        dims = {len(row) for row in rows}
        if len(dims) != 1:
            raise ValidationError(f"Half-spaces have mixed lengths {sorted(dims)}")
        if any(not any(row) for row in rows):
            raise ValidationError("Half-space vectors must be nonzero")
        object.__setattr__(self, "halfspaces", rows)

    @property
    def dimension(self) -> int:
        return len(self.halfspaces[0])

    def contains(self, v: Sequence[int]) -> bool:
        return all(_dot(c, v) >= 0 for c in self.halfspaces)

    def lineality_direction(self) -> Optional[tuple]:
        """A nonzero v with c . v = 0 for all rows, or None for pointed cones."""
        null = Matrix(self.halfspaces).nullspace()
        if not null:
            return None
        return primitive(list(null[0]))

    @classmethod
    def single_ray(cls, v: Sequence[int]) -> "RationalCone":
        """Half-spaces cutting out the ray through v."""
        v = primitive(v)
        k = next(i for i, c in enumerate(v) if c)
        d = len(v)
        rows = []
        for i in range(d):
            if i == k:
                continue
            row = [0] * d
            row[i], row[k] = v[k], -v[i]
            rows.append(tuple(row))
            rows.append(tuple(-c for c in row))
        rows.append(tuple((1 if v[k] > 0 else -1) if i == k else 0 for i in range(d)))
        return cls(tuple(rows))


def _check_pointed(cone: RationalCone) -> None:
    direction = cone.lineality_direction()
    if direction is not None:
        raise ConeError(f"Cone is not pointed: it contains the line through {direction}", direction)


def extremal_rays(cone: RationalCone) -> list:
    """Primitive generators of the extremal rays, sorted lexicographically."""
    _check_pointed(cone)
    d = cone.dimension
    lines = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    rays: list = []
    processed: list = []

    for step, a in enumerate(cone.halfspaces, start=1):
        cutting = next((l for l in lines if _dot(a, l) != 0), None)
        if cutting is not None:
            l0 = cutting if _dot(a, cutting) > 0 else tuple(-c for c in cutting)
            s0 = _dot(a, l0)
            lines = [
                primitive([s0 * c - _dot(a, l) * c0 for c, c0 in zip(l, l0)])
                for l in lines
                if l != cutting
            ]
            lines = [l for l in lines if any(l)]
            rays = [
                primitive([s0 * c - _dot(a, r) * c0 for c, c0 in zip(r, l0)]) for r in rays
            ]
            rays.append(l0)
        else:
            rays = _dd_step(a, rays, processed)
        processed.append(a)
        rays = sorted(set(rays))
        logger.debug(f"DD step {step}/{len(cone.halfspaces)}: {len(rays)} rays, {len(lines)} lines")

    if lines:
        # unreachable after the rank check
        raise ConeError("Cone is not pointed", lines[0])
    result = sorted(set(rays))
    logger.info(f"Cone in dimension {d} with {len(cone.halfspaces)} half-spaces has {len(result)} extremal rays")
    return result


def _dd_step(a: tuple, rays: list, processed: list) -> list:
    values = {r: _dot(a, r) for r in rays}
    plus = [r for r in rays if values[r] > 0]
    zero = [r for r in rays if values[r] == 0]
    minus = [r for r in rays if values[r] < 0]
    if not minus:
        return rays
    tight = {r: frozenset(i for i, c in enumerate(processed) if _dot(c, r) == 0) for r in rays}
    new = list(plus) + list(zero)
    for rp in plus:
        for rm in minus:
            common = tight[rp] & tight[rm]
            if any(common <= tight[r] for r in rays if r != rp and r != rm):
                continue
            combined = [values[rp] * cm - values[rm] * cp for cp, cm in zip(rp, rm)]
            new.append(primitive(combined))
    return new


def brute_force_rays(cone: RationalCone) -> list:
    """Oracle: solve every (d-1)-subset of tight constraints and keep feasible directions."""
    _check_pointed(cone)
    d = cone.dimension
    if d == 1:
        candidates = [(1,), (-1,)]
    else:
        candidates = []
        for subset in combinations(cone.halfspaces, d - 1):
            null = Matrix(subset).nullspace()
            if len(null) != 1:
                continue
            v = primitive(list(null[0]))
            candidates.extend([v, tuple(-c for c in v)])
    return sorted({v for v in candidates if cone.contains(v)})


@dataclass(frozen=True)
class SelfIntersectionMinimum:
    value: int
    ray: tuple


def min_self_intersection(
    cone: RationalCone, matrix: Sequence[Sequence[int]] = TABLE1
) -> SelfIntersectionMinimum:
    """Minimum of the quadratic form over the primitive extremal rays."""
    if len(matrix) != cone.dimension:
        raise ValidationError(
            f"Form of size {len(matrix)} does not match cone dimension {cone.dimension}"
        )
    rays = extremal_rays(cone)
    if not rays:
        raise ValidationError("Cone has no extremal rays")
    best = min(rays, key=lambda r: (bilinear(r, r, matrix), r))
    return SelfIntersectionMinimum(bilinear(best, best, matrix), best)
