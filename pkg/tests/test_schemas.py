from fractions import Fraction

import pytest
from pydantic import ValidationError as SchemaError

from diagonal.fibrations import cor2_solution
from diagonal.schemas import CheckResult, EquationRecord, ReportSummary, SearchHit, SolutionRecord


def test_equation_record_normalizes_rationals():
    record = EquationRecord(a="2/4", b=3, exponents=[2, 6, 6, 6])
    assert record.a == "1/2"
    assert record.b == 3
    assert record.to_equation().a == Fraction(1, 2)


def test_equation_record_rejects_floats_and_extra_fields():
    with pytest.raises(SchemaError):
        EquationRecord(a=0.5, b=1, exponents=[2, 6, 6, 6])
    with pytest.raises(SchemaError):
        EquationRecord(a=1, b=1, exponents=[2, 6, 6, 6], c=2)


def test_solution_record_from_solution():
    record = SolutionRecord.from_solution(cor2_solution(1, 1, 1))
    assert record.y == [0, 2]
    assert record.z == [1, 0, 0, 0, 0, 0, 3]
    assert record.x[3] == 10 and record.x[15] == 54
    assert record.common_factor == [1]
    assert record.generator == "cor2"
    assert record.to_solution().quadruple == cor2_solution(1, 1, 1).quadruple


def test_solution_record_needs_lists():
    with pytest.raises(SchemaError):
        SolutionRecord(a=1, b=1, exponents=[2, 6, 6, 6], x=1, y=[1], z=[1], w=[1])


def test_check_result_defaults():
    result = CheckResult(check="SELMER", passed=True)
    assert result.severity == "error"
    assert result.message == ""


def test_report_summary_ok():
    assert ReportSummary(total=2, passed=2, failed=0).ok
    assert not ReportSummary(total=2, passed=1, failed=1).ok


def test_search_hit_values():
    hit = SearchHit(kind="cubic", values=[Fraction(1, 2), 3], bound=5)
    assert hit.values == ["1/2", 3]
    assert hit.note is None
