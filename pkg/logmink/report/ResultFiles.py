#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

from pathlib import Path
from typing import Any

from ..common import Utils
from ..geometry import SymmetricPolygon
from ..functionals import FunctionalDescriptor, VariationalMeasure
from ..solver import SolveResult
from ..flow import SelfSimilarFlow, FlowVerificationReport

from .SvgWriter import emitSvg, flowSvg, solveSvg


FRAMES_CSV = "frames.csv"
VERIFICATION_JSON = "verification.json"
FLOW_SVG = "flow.svg"


def frameFileName(index: int) -> str:
    return f"frame_{index:04d}.json"


def writeSolveResult(path: Path, result: SolveResult, svgPath: Path|None = None) -> None:
    Utils.writeJson(path, result.toJson())
    if svgPath is not None:
        emitSvg(svgPath, solveSvg(result))


def evaluationReport(polygon: SymmetricPolygon, functional: FunctionalDescriptor) -> dict[str, Any]:
    sample = functional.sample(polygon)
    variational = VariationalMeasure.fromDensity(polygon, sample.surfaceDensity, functional.alpha)
    return {
        "functional": functional.name,
        "alpha": functional.alpha,
        "F_value": Utils.roundFloat(sample.value),
        "mesh_h": None if not functional.kind.needsFem else Utils.roundFloat(functional.resolveMeshH(polygon)),
        "surface_density": Utils.roundFloats(sample.surfaceDensity),
        "variational_measure": variational.toJson(),
    }


def writeFlow(outDir: Path, flow: SelfSimilarFlow, report: FlowVerificationReport, svg: bool = False) -> None:
    """Writes the frame table, one polygon file per frame, the verification report and optionally the figure"""
    outDir.mkdir(parents=True, exist_ok=True)
    rows = [[Utils.roundFloat(f.t), Utils.roundFloat(f.scale), Utils.roundFloat(f.value)] for f in flow.frames]
    Utils.writeCsv(outDir / FRAMES_CSV, ["t", "scale", "F_value"], rows)
    for i, frame in enumerate(flow.frames):
        Utils.writeJson(outDir / frameFileName(i), frame.body.toJson())
    Utils.writeJson(outDir / VERIFICATION_JSON, {
        "functional": flow.spec.functional.name,
        "death_time": Utils.roundFloat(flow.spec.deathTime),
        "result": flow.result.toJson(),
        "report": report.toJson(),
    })
    if svg:
        emitSvg(outDir / FLOW_SVG, flowSvg(flow.frames))
