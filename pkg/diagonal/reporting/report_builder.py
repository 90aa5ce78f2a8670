import logging
from typing import Any, Dict, List

from ..schemas import CheckResult, ReportSummary

logger = logging.getLogger(__name__)


class ReportBuilder:
    """
    Merges check results into a structured report.
    """

    def build_summary(self, results: List[CheckResult]) -> ReportSummary:
        passed = sum(1 for r in results if r.passed)
        return ReportSummary(total=len(results), passed=passed, failed=len(results) - passed)

    def build_final_report(self, results: List[CheckResult], fast: bool = False) -> Dict[str, Any]:
        """
        Construct the full structured report.
        """
        summary = self.build_summary(results)
        if not summary.ok:
            logger.warning(f"{summary.failed} of {summary.total} checks failed")
        return {
            "summary": summary.model_dump(),
            "fast": fast,
            "checks": [r.model_dump() for r in results],
        }

    def build_table(self, report: Dict[str, Any]) -> List[str]:
        """Pass/fail table, one line per check."""
        checks = report.get("checks", [])
        width = max((len(c["check"]) for c in checks), default=5)
        lines = [f"{'CHECK'.ljust(width)}  RESULT  MESSAGE"]
        for c in checks:
            status = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{c['check'].ljust(width)}  {status.ljust(6)}  {c['message']}")
        summary = report.get("summary", {})
        lines.append("")
        lines.append(f"{summary.get('passed', 0)}/{summary.get('total', 0)} checks passed")
        return lines
