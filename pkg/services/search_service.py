import logging
from typing import Optional, Sequence

from diagonal.arith.rational import format_rational, to_rational
from diagonal.exceptions import DegenerateLocusError, ValidationError
from diagonal.pencils import (
    build_pencil,
    cubic_point_search,
    example_split,
    pencil_survey,
    richmond_split,
    verify_recovered,
)
from diagonal.pencils.split import QuadSplit
from diagonal.schemas import SearchHit
from diagonal.search import SearchTask, mod3_obstruction, run_task, survey_small_coefficients
from diagonal.settings import Settings

logger = logging.getLogger(__name__)

NOTES = {
    "sextic": "x <= y (the equation is symmetric in x and y)",
    "surface": "positive y, z, w; weighted primitive",
    "selmer": "primitive, first nonzero entry positive",
    "cubic": "primitive when rhs = 0",
}


class SearchService:
    """
    Height-bounded searches, pencil scans and the coefficient survey.
    """

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers or Settings.WORKERS

    def search(self, task: SearchTask) -> list:
        hits = run_task(task, self.workers)
        return [
            SearchHit(kind=task.kind, values=list(hit), bound=task.bound, note=NOTES[task.kind])
            for hit in hits
        ]

    def mod3(self, coefficients: Sequence[int]) -> dict:
        return {"coefficients": list(coefficients), "obstructed": mod3_obstruction(*coefficients)}

    def survey(self, max_coeff: int, height: int) -> list:
        statuses = survey_small_coefficients(max_coeff, height, self.workers)
        return [
            {
                "coefficients": list(s.coefficients),
                "status": s.status,
                "witness": list(s.witness) if s.witness else None,
            }
            for s in statuses
        ]

    # ------------------------------------------------------------------
    # Pencils
    # ------------------------------------------------------------------
    def split(self, abcd: Sequence, seed: Optional[Sequence] = None, published: bool = False) -> QuadSplit:
        if published:
            split = example_split()
            if split.coefficients != tuple(to_rational(c) for c in abcd):
                raise ValidationError("The published split is for the coefficients 1,1,2,2")
            return split
        return richmond_split(*abcd, P0=seed)

    def pencil(
        self,
        split: QuadSplit,
        exponents: Sequence[int],
        t0,
        height: int,
    ) -> dict:
        """Pencil coefficients and the surface points on the member at t0."""
        curve = build_pencil(split, tuple(exponents))
        if not any(curve.at(t0)):
            raise DegenerateLocusError(f"Every coefficient of the pencil vanishes at t = {t0}")
        search = cubic_point_search(curve, t0, height)
        points = []
        for point in search.points:
            try:
                x = verify_recovered(curve, t0, point)
            except DegenerateLocusError as e:
                logger.warning(f"No x for {point} at t = {t0}: {e}")
                continue
            y, z, w = point
            points.append({"x": format_rational(x), "y": y, "z": z, "w": w})
        return {
            "A": str(curve.A),
            "B": str(curve.B),
            "C": str(curve.C),
            "mu": format_rational(split.mu),
            "t": format_rational(search.t0),
            "height": height,
            "degenerate": search.degenerate,
            "points": points,
        }

    def pencil_survey(self, split: QuadSplit, exponents: Sequence[int], bound: int, height: int) -> list:
        return [
            {
                "t": format_rational(p.t0),
                "x": format_rational(p.x),
                "y": p.y,
                "z": p.z,
                "w": p.w,
            }
            for p in pencil_survey(split, tuple(exponents), bound, height, self.workers)
        ]
