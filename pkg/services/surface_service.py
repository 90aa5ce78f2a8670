import logging
from typing import Optional, Sequence

from diagonal.arith.rational import format_rational
from diagonal.exceptions import ValidationError
from diagonal.forms import FormPairContext, cone_lift, del_pezzo_point, form_pair_point
from diagonal.loaders import load_constraints, load_form
from diagonal.surface import (
    DivisorClass,
    extremal_rays,
    genus_and_degree,
    min_self_intersection,
)

logger = logging.getLogger(__name__)

QUADRATIC_FORMS = ("table1",)


def _fmt(values) -> list:
    return [format_rational(v) for v in values]


class SurfaceService:
    """
    Cone minimization on the quartic surface and the form constructions.
    """

    def cone(self, constraints_path: str, form: Optional[str] = None) -> dict:
        cone = load_constraints(constraints_path)
        rays = extremal_rays(cone)
        result = {"dimension": cone.dimension, "rays": [list(r) for r in rays]}
        if form is None:
            return result
        if form not in QUADRATIC_FORMS:
            raise ValidationError(f"Unknown form '{form}', expected one of {QUADRATIC_FORMS}")
        minimum = min_self_intersection(cone)
        shape = genus_and_degree(DivisorClass(minimum.ray))
        result.update(
            {
                "minimum": minimum.value,
                "minimizer": list(minimum.ray),
                "genus": shape.genus,
                "degree": shape.degree,
            }
        )
        logger.info(f"Minimum self-intersection {minimum.value} at {minimum.ray}")
        return result

    def form_pair(self, a, b, f1_path: str, f2_path: str, u: Sequence, s, k: int = 1) -> dict:
        ctx = FormPairContext(a=a, b=b, f1=load_form(f1_path), f2=load_form(f2_path), u=tuple(u), s=s)
        point = form_pair_point(ctx, k)
        return {
            "k": k,
            "t": format_rational(ctx.t),
            "U": format_rational(point.U),
            "v": format_rational(point.v),
            "T": format_rational(point.T),
            "y1": format_rational(point.y1),
            "y2": format_rational(point.y2),
            "X": _fmt(point.X),
            "residual": 0,
        }

    def del_pezzo(
        self,
        a,
        b,
        u,
        v,
        f1_path: Optional[str] = None,
        f2_path: Optional[str] = None,
        w: Sequence = (),
    ) -> dict:
        """A point of a(p^4 - 1) = b(q^4 - r^2), lifted to the cone when forms are given."""
        p, q, r = del_pezzo_point(a, b, u, v)
        result = {"p": format_rational(p), "q": format_rational(q), "r": format_rational(r)}
        if f1_path is None and f2_path is None:
            return result
        if f1_path is None or f2_path is None:
            raise ValidationError("Lifting needs both --f1 and --f2")
        lifted = cone_lift(a, b, load_form(f1_path), load_form(f2_path), w, (p, q, r))
        result["lift"] = {
            "y1": format_rational(lifted.y1),
            "y2": format_rational(lifted.y2),
            "X": _fmt(lifted.X),
        }
        return result
