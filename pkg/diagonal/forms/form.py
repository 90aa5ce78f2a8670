"""
Homogeneous forms as evaluation-only data.

A Form is a list of (exponent vector, coefficient) terms. Nothing here
multiplies forms symbolically; products such as L * F^2 are kept as
factor lists and evaluated factor by factor.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..arith.rational import to_rational
from ..exceptions import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Form:
    terms: tuple

    def __post_init__(self):
        terms = []
        for exponents, coefficient in self.terms:
            exponents = tuple(int(e) for e in exponents)
            if any(e < 0 for e in exponents):
                raise ValidationError(f"Negative exponent in {exponents}")
            coefficient = to_rational(coefficient)
            if coefficient != 0:
                terms.append((exponents, coefficient))
        if not terms:
            raise ValidationError("A form needs at least one nonzero term")
        if len({len(e) for e, _ in terms}) != 1:
            raise ValidationError("All exponent vectors of a form must have the same length")
        degrees = {sum(e) for e, _ in terms}
        if len(degrees) != 1:
            raise ValidationError(f"Form is not homogeneous: term degrees {sorted(degrees)}")
        object.__setattr__(self, "terms", tuple(sorted(terms)))

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient=1) -> "Form":
        return cls(((tuple(exponents), coefficient),))

    @classmethod
    def linear(cls, coefficients: Sequence) -> "Form":
        n = len(coefficients)
        return cls(
            tuple(
                (tuple(1 if j == i else 0 for j in range(n)), c)
                for i, c in enumerate(coefficients)
            )
        )

    @property
    def variables(self) -> int:
        return len(self.terms[0][0])

    @property
    def degree(self) -> int:
        return sum(self.terms[0][0])

    def linear_coefficients(self) -> tuple:
        """Coefficient vector of a degree-1 form."""
        if self.degree != 1:
            raise ValidationError(f"Expected a linear form, got degree {self.degree}")
        coefficients = [Fraction(0)] * self.variables
        for exponents, c in self.terms:
            coefficients[exponents.index(1)] = c
        return tuple(coefficients)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.variables:
            raise ValidationError(f"Form in {self.variables} variables evaluated at {len(point)} values")
        point = [to_rational(c) for c in point]
        total = Fraction(0)
        for exponents, c in self.terms:
            value = c
            for x, e in zip(point, exponents):
                value *= x ** e
            total += value
        return total

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    def __str__(self):
        parts = []
        for exponents, c in self.terms:
            monomial = "*".join(f"X{i + 1}^{e}" if e > 1 else f"X{i + 1}" for i, e in enumerate(exponents) if e)
            parts.append(f"{c}*{monomial}" if monomial else str(c))
        return " + ".join(parts)


@dataclass(frozen=True)
class ProductForm:
    """Product of forms raised to powers, e.g. L * F^2."""
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValidationError("A product form needs at least one factor")
        if len({f.variables for f, _ in self.factors}) != 1:
            raise ValidationError("Factors of a product form must share their variables")

    @property
    def variables(self) -> int:
        return self.factors[0][0].variables

    @property
    def degree(self) -> int:
        return sum(f.degree * k for f, k in self.factors)

    def evaluate(self, point: Sequence) -> Fraction:
        value = Fraction(1)
        for f, k in self.factors:
            value *= f.evaluate(point) ** k
        return value

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)


def parse_form(text: str) -> Form:
    """
    Parse lines of "coefficient : exponent-vector".

    Exponents are separated by spaces or commas; '#' starts a comment.

    Example:
        3 : 2 1
        -1/2 : 0, 3
    """
    terms = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValidationError(f"Line {number}: expected 'coefficient : exponents', got {raw!r}")
        coefficient, exponents = line.split(":", 1)
        try:
            vector = tuple(int(e) for e in exponents.replace(",", " ").split())
        except ValueError:
            raise ValidationError(f"Line {number}: exponents must be integers, got {exponents.strip()!r}")
        if not vector:
            raise ValidationError(f"Line {number}: empty exponent vector")
        terms.append((vector, to_rational(coefficient)))
    form = Form(tuple(terms))
    logger.debug(f"Parsed form of degree {form.degree} in {form.variables} variables")
    return form
