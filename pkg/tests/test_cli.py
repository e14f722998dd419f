# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import json
import math

import pytest

from logmink.common import Utils
from logmink.frontendCommon.FrontendUtilities import EXIT_ERROR, EXIT_NONCONVERGENCE, EXIT_OK, EXIT_REFUSED, cliMain
from logmink.selfTest import ALL_CHECKS, CheckOutcome
from logmink.selfTest.SelfTestInternals import formatTable


def measureDocument(entries: list[tuple[float, float]]) -> dict:
    return {"dimension": 2, "pairs": [{"theta": theta, "mass": mass} for theta, mass in entries]}


UNIFORM_THREE = measureDocument([(k * math.pi / 3, 2.0) for k in range(3)])
TWO_PAIRS = measureDocument([(0.0, 1.0), (math.pi / 2, 1.0)])
SKEW = measureDocument([(0.0, 1.0), (1.0, 2.0), (2.0, 1.5)])


class TestCheckMeasure:
    def test_pass(self, writeJsonFile, capsys):
        assert cliMain(["check-measure", str(writeJsonFile("m.json", UNIFORM_THREE))]) == EXIT_OK
        assert capsys.readouterr().out.startswith("PASS")

    def test_two_pairs_are_refused(self, writeJsonFile, capsys):
        assert cliMain(["check-measure", str(writeJsonFile("m.json", TWO_PAIRS))]) == EXIT_REFUSED
        out = capsys.readouterr().out
        assert "FAIL" in out
        assert "pair mass equals half of total" in out

    def test_missing_file(self, tmp_path, capsys):
        assert cliMain(["check-measure", str(tmp_path / "missing.json")]) == EXIT_ERROR
        err = capsys.readouterr().err
        assert err.startswith("ERROR: ")
        assert err.count("\n") == 1

    def test_negative_mass(self, writeJsonFile, capsys):
        path = writeJsonFile("m.json", measureDocument([(0.0, -1.0), (1.0, 1.0), (2.0, 1.0)]))
        assert cliMain(["check-measure", str(path)]) == EXIT_ERROR
        assert "offending entry" in capsys.readouterr().err


class TestSolve:
    def test_hexagon(self, writeJsonFile, tmp_path):
        out = tmp_path / "result.json"
        svg = tmp_path / "result.svg"
        code = cliMain(["solve", "--functional", "volume", "--measure", str(writeJsonFile("m.json", UNIFORM_THREE)), "--out", str(out), "--svg", str(svg), "--tol-grad", "1e-10"])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["converged"] is True
        assert data["residual_linf"] <= 1e-8
        assert [p["support"] for p in data["body"]["pairs"]] == pytest.approx([3.0 ** 0.25] * 3, abs=1e-6)
        assert svg.read_text().count("<line ") == 12

    def test_refused(self, writeJsonFile, tmp_path, capsys):
        out = tmp_path / "result.json"
        code = cliMain(["solve", "--functional", "volume", "--measure", str(writeJsonFile("m.json", TWO_PAIRS)), "--out", str(out)])
        assert code == EXIT_REFUSED
        assert not out.exists()
        assert capsys.readouterr().err.startswith("ERROR: ")

    def test_nonconvergence_still_writes(self, writeJsonFile, tmp_path):
        out = tmp_path / "result.json"
        code = cliMain(["solve", "--functional", "volume", "--measure", str(writeJsonFile("m.json", SKEW)), "--out", str(out), "--max-iters", "1", "--tol-grad", "1e-14"])
        assert code == EXIT_NONCONVERGENCE
        assert json.loads(out.read_text())["converged"] is False

    def test_invalid_option(self, writeJsonFile, tmp_path, capsys):
        code = cliMain(["solve", "--functional", "volume", "--measure", str(writeJsonFile("m.json", SKEW)), "--out", str(tmp_path / "r.json"), "--tol-grad", "-1"])
        assert code == EXIT_ERROR
        assert "tolGrad" in capsys.readouterr().err

    def test_unknown_functional(self, writeJsonFile, tmp_path):
        with pytest.raises(SystemExit):
            cliMain(["solve", "--functional", "capacity", "--measure", str(writeJsonFile("m.json", SKEW)), "--out", str(tmp_path / "r.json")])


class TestEval:
    def test_square_volume(self, writeJsonFile, capsys):
        square = {"dimension": 2, "pairs": [{"theta": 0.0, "support": 1.0}, {"theta": math.pi / 2, "support": 1.0}]}
        assert cliMain(["eval", "--polygon", str(writeJsonFile("p.json", square)), "--functional", "volume"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["F_value"] == pytest.approx(4.0)
        assert [p["mass"] for p in data["variational_measure"]["pairs"]] == pytest.approx([2.0, 2.0])


class TestFlow:
    def test_volume(self, writeJsonFile, tmp_path):
        outDir = tmp_path / "flow"
        code = cliMain(["flow", "--functional", "volume", "--measure", str(writeJsonFile("m.json", UNIFORM_THREE)), "--death-time", "1.0", "--frames", "4", "--out-dir", str(outDir), "--svg"])
        assert code == EXIT_OK
        rows = Utils.readCsv(outDir / "frames.csv")
        assert len(rows) == 5
        assert [float(r[0]) for r in rows[1:]] == pytest.approx([0.0, 0.25, 0.5, 0.75])
        assert (outDir / "frame_0003.json").exists()
        assert json.loads((outDir / "verification.json").read_text())["report"]["passed"] is True
        assert (outDir / "flow.svg").exists()

    def test_eigenvalue_is_not_a_choice(self, writeJsonFile, tmp_path):
        with pytest.raises(SystemExit):
            cliMain(["flow", "--functional", "eigenvalue", "--measure", str(writeJsonFile("m.json", UNIFORM_THREE)), "--death-time", "1.0", "--out-dir", str(tmp_path)])

    def test_nonpositive_death_time(self, writeJsonFile, tmp_path, capsys):
        code = cliMain(["flow", "--functional", "volume", "--measure", str(writeJsonFile("m.json", UNIFORM_THREE)), "--death-time", "0", "--out-dir", str(tmp_path / "flow")])
        assert code == EXIT_ERROR
        assert capsys.readouterr().err.startswith("ERROR: ")


class TestSelfTest:
    def test_quick_checks_are_registered(self):
        quick = [check for check in ALL_CHECKS if not check.full]
        assert len(quick) >= 10
        assert len({check.name for check in ALL_CHECKS}) == len(ALL_CHECKS)

    def test_format_table(self):
        outcomes = [CheckOutcome("solver: hexagon", True, "support err 0"), CheckOutcome("fem: square torsion", False, "rel err 0.5")]
        table = formatTable(outcomes)
        assert len(table.splitlines()) == 2
        assert table.splitlines()[0].startswith("PASS  solver: hexagon")
        assert table.splitlines()[1].startswith("FAIL")

    @pytest.mark.slow
    def test_quick_run_passes(self, capsys):
        assert cliMain(["selftest", "--seed", "3"]) == EXIT_OK
        assert "FAIL" not in capsys.readouterr().out
