from abc import ABC, abstractmethod

from ..schemas import CheckResult


class Check(ABC):
    id = "BASE_CHECK"
    severity = "error"
    # part of the --fast subset unless the config says otherwise
    fast = True

    def result(self, passed: bool, message: str) -> CheckResult:
        return CheckResult(
            check=self.id,
            passed=passed,
            severity="info" if passed else self.severity,
            message=message,
        )

    @abstractmethod
    def evaluate(self) -> CheckResult:
        pass
