import json

import pytest

from diagonal.exceptions import ConfigError
from diagonal.reporting import Check, CheckEngine, ExportManager, ReportBuilder
from diagonal.reporting.checks import (
    ConeEngineCheck,
    ConicCheck,
    FormPipelineCheck,
    PairingTableCheck,
    PencilExampleCheck,
    QuarticCurveCheck,
    QuarticDisplayCheck,
    SelmerCheck,
    SexticDisplayCheck,
    SexticSolutionCheck,
    SpecialSolutionCheck,
    TorsionSpecializationCheck,
    default_checks,
)
from services.report_service import ReportService


class PassingCheck(Check):
    id = "PASSING"

    def evaluate(self):
        return self.result(True, "ok")


class FailingCheck(Check):
    id = "FAILING"

    def evaluate(self):
        return self.result(False, "mismatch")


class ExplodingCheck(Check):
    id = "EXPLODING"

    def evaluate(self):
        raise RuntimeError("boom")


class SlowCheck(PassingCheck):
    id = "SLOW"
    fast = False


class ConfigurableCheck(PassingCheck):
    id = "CONFIGURABLE"

    def configure(self, cfg):
        self.height = cfg.get("height")

    def evaluate(self):
        return self.result(True, f"height {self.height}")


def test_engine_execution():
    engine = CheckEngine(checks=[PassingCheck(), FailingCheck()], config={})
    results = engine.run()
    assert [r.passed for r in results] == [True, False]
    assert results[0].severity == "info"
    assert results[1].severity == "error"


def test_engine_respects_enabled_flag():
    engine = CheckEngine(
        checks=[PassingCheck(), FailingCheck()],
        config={"FAILING": {"enabled": False}},
    )
    assert [r.check for r in engine.run()] == ["PASSING"]


def test_engine_fast_subset():
    checks = [PassingCheck(), SlowCheck()]
    assert [r.check for r in CheckEngine(checks, {}).run(fast=True)] == ["PASSING"]
    assert len(CheckEngine(checks, {}).run(fast=False)) == 2
    # the config can move a check out of the fast subset
    config = {"PASSING": {"fast": False}}
    assert CheckEngine(checks, config).run(fast=True) == []


def test_engine_passes_config_to_check():
    results = CheckEngine([ConfigurableCheck()], {"CONFIGURABLE": {"height": 7}}).run()
    assert results[0].message == "height 7"


def test_engine_catches_check_errors():
    results = CheckEngine([ExplodingCheck()], {}).run()
    assert not results[0].passed
    assert results[0].message == "Check failed safely: boom"


def test_report_builder():
    results = CheckEngine([PassingCheck(), FailingCheck()], {}).run()
    report = ReportBuilder().build_final_report(results, fast=True)
    assert report["summary"] == {"total": 2, "passed": 1, "failed": 1}
    assert report["fast"] is True

    table = ReportBuilder().build_table(report)
    assert table[0].startswith("CHECK")
    assert "FAIL" in table[2]
    assert table[-1] == "1/2 checks passed"


def test_export_manager(temp_dir):
    results = CheckEngine([PassingCheck()], {}).run()
    report = ReportBuilder().build_final_report(results)
    manager = ExportManager()
    manager.export_to_json(report, str(temp_dir / "out" / "report.json"))
    manager.export_to_txt(report, str(temp_dir / "out" / "report.txt"))

    data = json.loads((temp_dir / "out" / "report.json").read_text())
    assert data["summary"]["passed"] == 1
    assert "generated_at" in data
    text = (temp_dir / "out" / "report.txt").read_text()
    assert text.startswith("# REPRODUCTION REPORT")
    assert "Subset: full" in text


def test_report_service(temp_dir):
    config = temp_dir / "checks.json"
    config.write_text(json.dumps({"FAILING": {"enabled": False}}))
    service = ReportService(str(config), checks=[PassingCheck(), FailingCheck()])

    report = service.run(output_dir=str(temp_dir))
    assert report["summary"]["failed"] == 0
    assert (temp_dir / "report.json").exists()
    assert (temp_dir / "report.txt").exists()


def test_default_checks_have_unique_ids():
    ids = [c.id for c in default_checks()]
    assert len(ids) == len(set(ids))


@pytest.mark.parametrize(
    "check_class",
    [
        SpecialSolutionCheck,
        QuarticDisplayCheck,
        SexticDisplayCheck,
        QuarticCurveCheck,
        PairingTableCheck,
        TorsionSpecializationCheck,
        ConicCheck,
        ConeEngineCheck,
        FormPipelineCheck,
        PencilExampleCheck,
    ],
)
def test_quick_reproduction_checks_pass(check_class):
    result = check_class().evaluate()
    assert result.passed, result.message


@pytest.mark.slow
@pytest.mark.parametrize("check_class", [SexticSolutionCheck, SelmerCheck])
def test_search_reproduction_checks_pass(check_class):
    result = check_class().evaluate()
    assert result.passed, result.message


def test_export_failure_raises(temp_dir):
    results = CheckEngine([PassingCheck()], {}).run()
    report = ReportBuilder().build_final_report(results)
    blocker = temp_dir / "blocker"
    blocker.write_text("not a directory")
    with pytest.raises(ConfigError, match="Cannot write report"):
        ExportManager().export_to_json(report, str(blocker / "report.json"))
    with pytest.raises(ConfigError, match="Cannot write report"):
        ExportManager().export_to_txt(report, str(blocker / "report.txt"))
