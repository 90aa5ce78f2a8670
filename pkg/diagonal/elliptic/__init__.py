from .weierstrass import INFINITY, CurvePoint, WeierstrassCurve, ec_add, ec_multiply
from .quartic import QuarticCurve, QuarticTransport, quartic_group
from .plane_cubic import DiagonalCubic, cross, primitive_triple
from .division import DivisionPolynomial, division_polynomial
from .torsion import (
    TorsionResult,
    TorsionShape,
    TorsionSpecializationReport,
    curve_2666,
    is_torsion_over_Q,
    lemma_positive_rank,
    rational_nth_roots,
    rational_roots_in_t,
    torsion_j0,
    torsion_j1728,
    torsion_specializations_2666,
)

__all__ = [
    "INFINITY",
    "CurvePoint",
    "DiagonalCubic",
    "DivisionPolynomial",
    "QuarticCurve",
    "QuarticTransport",
    "TorsionResult",
    "TorsionShape",
    "TorsionSpecializationReport",
    "WeierstrassCurve",
    "cross",
    "curve_2666",
    "division_polynomial",
    "ec_add",
    "ec_multiply",
    "is_torsion_over_Q",
    "lemma_positive_rank",
    "primitive_triple",
    "quartic_group",
    "rational_nth_roots",
    "rational_roots_in_t",
    "torsion_j0",
    "torsion_j1728",
    "torsion_specializations_2666",
]
