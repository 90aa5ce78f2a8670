import logging
from pathlib import Path
from typing import Optional

from diagonal.arith.rational import format_rational
from diagonal.fibrations import generate, is_trivial, verify_identity
from diagonal.fibrations.equation import ParametricSolution
from diagonal.loaders import load_solution, save_solution
from diagonal.settings import Settings

logger = logging.getLogger(__name__)


class GenerationService:
    """
    Runs the solution generators and checks solution files.
    """

    def __init__(self, output_dir: Optional[str] = None):
        self.output_dir = Path(output_dir or Settings.OUTPUT_DIR)

    def default_path(self, family: str, a, b, m: int) -> Path:
        name = f"{family}_a{format_rational(a)}_b{format_rational(b)}_m{m}.json".replace("/", "over")
        return self.output_dir / name

    def describe(self, sol: ParametricSolution) -> dict:
        """Degrees, leftover common factor and identity status of a solution."""
        return {
            "equation": str(sol.equation),
            "generator": sol.generator,
            "multiple": sol.multiple,
            "degrees": list(sol.degrees),
            "common_factor": str(sol.common_factor),
            "coprime": sol.is_coprime(),
            "identity": verify_identity(sol),
            "trivial": is_trivial(sol),
        }

    def generate(self, family: str, a, b, m: int, out: Optional[str] = None) -> dict:
        """
        Generate, write the solution file and return its description.
        """
        sol = generate(family, a, b, m)
        path = save_solution(sol, out or self.default_path(family, sol.equation.a, sol.equation.b, m))
        summary = self.describe(sol)
        summary["file"] = str(path)
        return summary

    def verify(self, file_path: str) -> dict:
        sol = load_solution(file_path)
        summary = self.describe(sol)
        summary["file"] = str(file_path)
        if not summary["identity"]:
            logger.error(f"{file_path} does not satisfy {sol.equation}: residual {sol.residual()}")
        elif summary["trivial"]:
            logger.warning(f"{file_path} holds a trivial solution")
        return summary
