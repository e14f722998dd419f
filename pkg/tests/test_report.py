# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import json
import re

import numpy as np
import pytest

from logmink.common import GlobalConfig, InvalidInputError, Utils
from logmink.flow import FlowSpec, buildSelfSimilar, verifySelfSimilar
from logmink.functionals import FunctionalDescriptor, FunctionalKind
from logmink.geometry import SymmetricPolygon
from logmink.measures import EvenMeasure
from logmink.report import FLOW_SVG, FRAMES_CSV, VERIFICATION_JSON, evaluationReport, flowSvg, frameFileName, polygonPath, solveSvg, writeFlow, writeSolveResult
from logmink.solver import solveLogMinkowski


VOLUME = FunctionalDescriptor(FunctionalKind.VOLUME)


@pytest.fixture(scope="module")
def hexagonResult():
    return solveLogMinkowski(EvenMeasure.uniform(3, 6.0), VOLUME)


class TestSvg:
    """Deterministic SVG figures"""

    def test_polygon_path(self):
        path = polygonPath(SymmetricPolygon.box(1.0, 1.0).vertices)
        assert path.startswith("M ")
        assert path.endswith(" Z")
        assert path.count(" L ") == 3
        assert "-0.000000" not in path

    def test_solve_figure(self, hexagonResult):
        svg = solveSvg(hexagonResult)
        assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
        assert svg.count("<path ") == 1
        # One bar of each measure on both normals of every pair
        lines = re.findall(r'<line x1="([^"]+)" y1="([^"]+)" x2="([^"]+)" y2="([^"]+)"', svg)
        assert len(lines) == 12
        lengths = [np.hypot(float(x2) - float(x1), float(y2) - float(y1)) for x1, y1, x2, y2 in lines]
        assert np.allclose(lengths, lengths[0], rtol=1e-5)

    def test_solve_figure_is_deterministic(self, hexagonResult):
        assert solveSvg(hexagonResult) == solveSvg(hexagonResult)

    def test_view_box_is_centered(self, hexagonResult):
        match = re.search(r'viewBox="(\S+) (\S+) (\S+) (\S+)"', solveSvg(hexagonResult))
        assert match is not None
        x, y, w, h = (float(v) for v in match.groups())
        assert x == pytest.approx(-w / 2, abs=1e-6)
        assert y == pytest.approx(-h / 2, abs=1e-6)
        assert w == h

    def test_flow_figure_needs_frames(self):
        with pytest.raises(InvalidInputError):
            flowSvg([])


class TestResultFiles:
    """JSON, CSV and SVG outputs"""

    def test_solve_result(self, tmp_path, hexagonResult):
        writeSolveResult(tmp_path / "result.json", hexagonResult, tmp_path / "result.svg")
        data = json.loads((tmp_path / "result.json").read_text())
        assert data["F_value"] == pytest.approx(6.0)
        assert data["body"]["pairs"][0]["support"] == pytest.approx(3.0 ** 0.25)
        assert (tmp_path / "result.svg").read_text().endswith("</svg>\n")

    def test_evaluation_report(self):
        data = evaluationReport(SymmetricPolygon.box(1.0, 1.0), VOLUME)
        assert data["F_value"] == pytest.approx(4.0)
        assert data["mesh_h"] is None
        assert data["surface_density"] == pytest.approx([4.0, 4.0])
        assert [p["mass"] for p in data["variational_measure"]["pairs"]] == pytest.approx([2.0, 2.0])

    def test_json_digits(self):
        GlobalConfig.JSON_DIGITS = 6
        data = evaluationReport(SymmetricPolygon.regular(3), VOLUME)
        assert data["F_value"] == 3.4641

    def test_flow_directory(self, tmp_path):
        spec = FlowSpec(VOLUME, 1.0, EvenMeasure.uniform(3, 1.0), FlowSpec.uniformFrames(1.0, 4))
        flow = buildSelfSimilar(spec)
        writeFlow(tmp_path, flow, verifySelfSimilar(flow), svg=True)

        rows = Utils.readCsv(tmp_path / FRAMES_CSV)
        assert rows[0] == ["t", "scale", "F_value"]
        assert len(rows) == 5
        assert float(rows[4][1]) == pytest.approx(0.5)
        for i in range(4):
            assert (tmp_path / frameFileName(i)).exists()
        assert frameFileName(3) == "frame_0003.json"

        verification = json.loads((tmp_path / VERIFICATION_JSON).read_text())
        assert verification["functional"] == "volume"
        assert verification["report"]["passed"] is True
        assert (tmp_path / FLOW_SVG).read_text().count("<text ") == 4
