import json

import pytest

from projcoinv.cli import main, run


def _json(capsys, argv):
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_stats_words(capsys):
    code = main(["stats", "words", "--alpha", "2,1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "A = 1 + t*q + t*q^2" in out
    assert out.count("\n") == 7


def test_character_text(capsys):
    assert main(["character", "pn", "--n", "2", "--method", "syt"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "s[2] + t*q*s[1,1]"


def test_report_schema(capsys):
    code, report = _json(capsys, ["hilbert", "quotient", "--alpha", "2,1"])
    assert code == 0
    assert list(report) == ["command", "parameters", "status", "results", "timing"]
    assert report["command"] == "hilbert quotient"
    assert report["parameters"]["alpha"] == [2, 1]
    assert report["results"]["text"] == "1 + t*q + t*q^2"
    assert report["timing"] is None


def test_output_is_deterministic(capsys):
    first = _json(capsys, ["verify", "all", "--max-n", "2"])
    second = _json(capsys, ["verify", "all", "--max-n", "2"])
    assert first == second
    assert first[0] == 0 and first[1]["status"] == "ok"


def test_verify_all_small(capsys):
    assert main(["verify", "all", "--max-n", "3"]) == 0
    assert "all suites passed" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["qseries", "multinomial", "--alpha", "2,2"],
        ["qseries", "eulerian", "--n", "3"],
        ["ehrhart", "--n", "2", "--r", "2"],
        ["ehrhart", "--polytope", "segre", "--alpha", "2,1", "--r", "1"],
        ["hilbert", "segre", "--alpha", "2,1", "--rmax", "3"],
        ["hilbert", "partial", "--alpha", "2,2"],
        ["character", "residual", "--k", "2", "--m", "2", "--method", "trace"],
        ["basis", "--alpha", "2,2"],
        ["basis", "--alpha", "2,2", "--deformed"],
        ["stats", "syt", "--shape", "2,1"],
        ["verify", "fibre", "--n", "3"],
        ["verify", "phi-trivial", "--n", "2"],
        ["verify", "macmahon", "--max-n", "2", "--rmax", "4"],
    ],
)
def test_commands_succeed(capsys, argv):
    code, report = _json(capsys, argv)
    assert code == 0 and report["status"] == "ok"


def test_usage_errors(capsys):
    assert main(["nonsense"]) == 2
    assert main(["hilbert", "quotient", "--bogus"]) == 2
    assert main(["hilbert", "quotient"]) == 2
    assert main(["stats", "words", "--alpha", "2,0"]) == 2


def test_budget_error(capsys):
    code, report = _json(capsys, ["ehrhart", "--n", "12", "--r", "12", "--budget", "10"])
    assert code == 2
    assert report["status"] == "error"
    assert "budget" in report["results"]["error"]


def test_failure_exit_code(monkeypatch, capsys):
    from projcoinv import cli

    monkeypatch.setattr(cli.SUITES["phi-trivial"].__globals__["diagonal"], "phi_trivial_check", _broken_phi)
    code, report = _json(capsys, ["verify", "phi-trivial", "--n", "2"])
    assert code == 1
    assert report["status"] == "fail"
    assert report["results"]["failures"][0]["witness"] == {"subsets": [[1]]}


def _broken_phi(n):
    from projcoinv.diagonal import PhiReport

    return PhiReport(n, False, [[1]], [], None)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["qseries", "multinomial", "--alpha", "2,1", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["results"]["coeffs"] == ["1", "1", "1"]


def test_timing_opt_in(capsys):
    _, report = run(["qseries", "eulerian", "--n", "2", "--timing", "--json"])
    assert report["timing"]["seconds"] >= 0
