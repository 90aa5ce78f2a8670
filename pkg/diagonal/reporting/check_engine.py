import logging

from ..schemas import CheckResult

logger = logging.getLogger(__name__)


class CheckEngine:
    def __init__(self, checks, config):
        self.checks = checks
        self.config = config

    def run(self, fast: bool = False) -> list:
        results = []

        for check in self.checks:
            cfg = self.config.get(check.id, {})
            if not cfg.get("enabled", True):
                continue
            if fast and not cfg.get("fast", check.fast):
                logger.debug(f"Skipping {check.id} in the fast subset")
                continue

            if hasattr(check, "configure"):
                check.configure(cfg)

            try:
                result = check.evaluate()
            except Exception as e:
                result = CheckResult(
                    check=check.id,
                    passed=False,
                    severity=check.severity,
                    message=f"Check failed safely: {str(e)}",
                )

            if result.passed:
                logger.info(f"{check.id}: {result.message}")
            else:
                logger.error(f"{check.id} failed: {result.message}")
            results.append(result)

        return results
