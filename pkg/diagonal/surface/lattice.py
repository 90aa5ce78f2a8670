"""
Divisor classes on x^4 - y^4 = h(z^4 - w^4) for h not a square.

Classes are integer vectors over the basis of four lines and two line
pairs; the intersection pairing is the fixed matrix TABLE1.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from sympy import Matrix, expand, symbols

from ..exceptions import ValidationError, VerificationError

logger = logging.getLogger(__name__)

TABLE1 = (
    (-2, 1, 1, 0, 2, 0),
    (1, -2, 0, 1, 2, 0),
    (1, 0, -2, 1, 0, 0),
    (0, 1, 1, -2, 0, 0),
    (2, 2, 0, 0, -2, 2),
    (0, 0, 0, 0, 2, -4),
)

# degree of each basis class: four lines and two line pairs
DEGREES = (1, 1, 1, 1, 2, 2)

RANK = len(TABLE1)


@dataclass(frozen=True)
class DivisorClass:
    n: tuple

    def __post_init__(self):
        n = tuple(int(c) for c in self.n)
        if len(n) != RANK:
            raise ValidationError(f"A divisor class needs {RANK} coordinates, got {len(n)}")
        object.__setattr__(self, "n", n)

    @classmethod
    def basis(cls, i: int) -> "DivisorClass":
        """Delta_i, 1-based."""
        if not 1 <= i <= RANK:
            raise ValidationError(f"Basis index must be in 1..{RANK}, got {i}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(RANK)))

    @classmethod
    def zero(cls) -> "DivisorClass":
        return cls((0,) * RANK)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.n, other.n)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.n, other.n)))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.n))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.n))


def bilinear(u: Sequence[int], v: Sequence[int], matrix: Sequence[Sequence[int]] = TABLE1) -> int:
    return sum(u[i] * matrix[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def pairing(D1: DivisorClass, D2: DivisorClass) -> int:
    """Intersection number (D1 . D2)."""
    return bilinear(D1.n, D2.n)


def self_intersection(D: DivisorClass) -> int:
    return pairing(D, D)


def degree(D: DivisorClass) -> int:
    return sum(d * c for d, c in zip(DEGREES, D.n))


@dataclass(frozen=True)
class GenusDegree:
    genus: int
    degree: int


def genus_and_degree(D: DivisorClass) -> GenusDegree:
    """Arithmetic genus from 2g - 2 = (D . D), and the degree."""
    square = self_intersection(D)
    if square % 2:
        raise VerificationError(f"Odd self-intersection {square} in an even lattice", residual=square)
    return GenusDegree(genus=1 + square // 2, degree=degree(D))


def pairing_matrix() -> Matrix:
    return Matrix(TABLE1)


def lattice_invariants() -> dict:
    """Symmetry, evenness and determinant of the pairing matrix."""
    M = pairing_matrix()
    det = int(M.det())
    invariants = {
        "symmetric": M == M.T,
        "even": all(M[i, i] % 2 == 0 for i in range(RANK)),
        "determinant": det,
    }
    if det == 0:
        raise VerificationError("The pairing matrix is degenerate", residual=det)
    return invariants


def five_squares(n: Sequence) -> list:
    """The five weighted squares whose sum is d^2 - 4(D . D)."""
    n1, n2, n3, n4, n5, n6 = n
    d = n1 + n2 + n3 + n4 + 2 * n5 + 2 * n6
    return [
        (-d + 4 * n5) ** 2,
        4 * (-d + n2 + 3 * n5 + n3 + 2 * n4 + 2 * n6) ** 2,
        4 * (-d + 2 * n2 + 2 * n5 + 2 * n3 + 2 * n6) ** 2,
        4 * (n2 - n5 - n3) ** 2,
        16 * n6 ** 2,
    ]


def sum_of_squares_identity() -> bool:
    """Check d^2 - 4(D . D) = sum of five squares as a polynomial identity in n1..n6."""
    n = symbols("n1:7")
    d = sum(c * ni for c, ni in zip(DEGREES, n))
    lhs = d ** 2 - 4 * bilinear(n, n)
    difference = expand(lhs - sum(five_squares(n)))
    if difference != 0:
        logger.error(f"Sum-of-squares identity fails with residual {difference}")
        return False
    return True
