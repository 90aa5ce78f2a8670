import json

import pytest

from diagonal.cli import build_parser, main
from diagonal.exceptions import ValidationError
from diagonal.reporting import default_checks
from services.generation_service import GenerationService
from services.search_service import SearchService


def _records(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines() if line]


def test_parser_accepts_flags_after_subcommand():
    args = build_parser().parse_args(["generate", "--family", "2666", "--a", "1/2", "--json"])
    assert args.family == "2666"
    assert str(args.a) == "1/2"
    assert args.json is True


def test_parser_rejects_unknown_family():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["generate", "--family", "1234"])


def test_generate_and_verify(temp_dir, capsys):
    path = temp_dir / "special.json"
    assert main(["generate", "--family", "2666", "--out", str(path), "--json"]) == 0
    summary = _records(capsys)[0]
    assert summary["identity"] is True
    assert summary["degrees"] == [15, 1, 6, 6]

    assert main(["--json", "verify", str(path)]) == 0
    assert _records(capsys)[0]["trivial"] is False


def test_verify_corrupted_solution(temp_dir, capsys):
    path = temp_dir / "special.json"
    main(["generate", "--family", "2666", "--out", str(path), "--json"])
    data = json.loads(path.read_text())
    data["x"][0] = 1
    path.write_text(json.dumps(data))
    capsys.readouterr()

    assert main(["verify", str(path), "--json"]) == 1
    assert _records(capsys)[0]["identity"] is False


def test_verify_empty_file_is_usage_error(temp_dir, capsys):
    path = temp_dir / "empty.json"
    path.write_text("")
    assert main(["verify", str(path)]) == 2
    assert "Empty solution file" in capsys.readouterr().err


def test_generate_4444_is_usage_error(capsys):
    assert main(["generate", "--family", "4444"]) == 2
    assert "no fibration generator" in capsys.readouterr().err


def test_cone_with_table1(temp_dir, capsys):
    path = temp_dir / "orthant.txt"
    path.write_text("\n".join(" ".join("1" if i == j else "0" for j in range(6)) for i in range(6)))
    assert main(["cone", "--input", str(path), "--form", "table1", "--json"]) == 0
    result = _records(capsys)[0]
    assert len(result["rays"]) == 6
    assert result["minimum"] == -4
    assert result["minimizer"] == [0, 0, 0, 0, 0, 1]
    assert (result["genus"], result["degree"]) == (-1, 2)


def test_forms_del_pezzo(capsys):
    assert main(["forms", "del-pezzo", "--a", "1", "--b", "1", "--u", "2", "--v", "1", "--json"]) == 0
    assert _records(capsys)[0] == {"p": "-7/9", "q": "16/9", "r": "88/27"}


def test_pencil_needs_parameter():
    with pytest.raises(SystemExit):
        main(["pencil", "--abcd", "1,1,2,2", "--exponents", "3,3,3"])


def test_pencil_published_member(capsys):
    code = main([
        "pencil", "--abcd", "1,1,2,2", "--exponents", "3,3,3",
        "--published-split", "--t", "1/13", "--height", "20", "--json",
    ])
    assert code == 0
    header, *points = _records(capsys)
    assert header["mu"] == "6"
    assert header["t"] == "1/13"
    assert any((p["y"], p["z"], p["w"]) == (5, 18, 7) for p in points)


def test_search_mod3(capsys):
    assert main(["search", "mod3", "--abcd", "1,1,3,3", "--json"]) == 0
    assert _records(capsys) == [{"coefficients": [1, 1, 3, 3], "obstructed": True}]


def test_search_cubic(capsys):
    assert main(["search", "cubic", "--coefficients", "1,1,1", "--rhs", "3", "--height", "1", "--json"]) == 0
    hits = _records(capsys)
    assert [h["values"] for h in hits] == [[1, 1, 1]]


def test_default_solution_path():
    path = GenerationService("out").default_path("cor2", "1/2", 1, 2)
    assert path.name == "cor2_a1over2_b1_m2.json"


def test_published_split_needs_matching_coefficients():
    with pytest.raises(ValidationError):
        SearchService(1).split([1, 1, 1, 1], published=True)


def test_report_write_failure_is_usage_error(temp_dir):
    config = temp_dir / "checks.json"
    config.write_text(json.dumps({c.id: {"enabled": False} for c in default_checks()}))
    blocker = temp_dir / "blocker"
    blocker.write_text("not a directory")
    code = main(["report", "--config", str(config), "--out", str(blocker / "report"), "--json"])
    assert code == 2
