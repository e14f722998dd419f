#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..common import Utils
from ..common.GlobalConfig import GlobalConfig
from ..common.Errors import InvalidInputError
from ..geometry import SymmetricPolygon
from ..solver import SolveResult
from ..flow import FlowFrame


FloatArray = npt.NDArray[np.float64]

_NU_COLOR = "#1f77b4"
_V_COLOR = "#ff7f0e"
_OUTLINE_COLOR = "#222222"


def _fmt(value: float) -> str:
    text = f"{value:.6f}"
    # Avoids emitting "-0.000000"
    if text.strip("-0.") == "":
        return "0.000000"
    return text


def _point(x: float, y: float) -> str:
    # SVG has the y axis pointing down
    return f"{_fmt(x)},{_fmt(-y)}"


def polygonPath(vertices: FloatArray) -> str:
    parts = [f"M {_point(float(vertices[0, 0]), float(vertices[0, 1]))}"]
    for x, y in vertices[1:]:
        parts.append(f"L {_point(float(x), float(y))}")
    parts.append("Z")
    return " ".join(parts)


def _header(extent: float) -> list[str]:
    size = GlobalConfig.SVG_SIZE
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="{_fmt(-extent)} {_fmt(-extent)} {_fmt(2 * extent)} {_fmt(2 * extent)}">',
    ]


def _outline(polygon: SymmetricPolygon, strokeWidth: float, color: str = _OUTLINE_COLOR) -> str:
    return f'  <path d="{polygonPath(polygon.vertices)}" fill="none" stroke="{color}" stroke-width="{_fmt(strokeWidth)}"/>'


def solveSvg(result: SolveResult) -> str:
    """The body of a solve with two bars per normal direction: the requested mass and the variational measure"""
    body = result.body
    radius = float(np.max(np.hypot(body.vertices[:, 0], body.vertices[:, 1])))
    barLength = 0.35 * radius
    extent = 1.5 * radius
    stroke = extent / 200.0

    maxMass = float(max(np.max(result.measure.mass), np.max(result.variational.mass)))
    barWidth = min(0.06 * radius, 0.5 * radius * np.pi / max(1, body.pairCount))

    lines = _header(extent)
    lines.append(_outline(body, stroke))
    for i in range(body.pairCount):
        nuHeight = barLength * float(result.measure.mass[i]) / maxMass
        vHeight = barLength * float(result.variational.mass[i]) / maxMass
        for sign in (1.0, -1.0):
            normal = sign * np.array([np.cos(body.thetas[i]), np.sin(body.thetas[i])])
            tangent = np.array([-normal[1], normal[0]])
            base = float(body.support[i]) * normal
            for offset, height, color in ((-0.5, nuHeight, _NU_COLOR), (0.5, vHeight, _V_COLOR)):
                start = base + offset * barWidth * tangent
                end = start + height * normal
                lines.append(f'  <line x1="{_fmt(start[0])}" y1="{_fmt(-start[1])}" x2="{_fmt(end[0])}" y2="{_fmt(-end[1])}" stroke="{color}" stroke-width="{_fmt(barWidth)}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def flowSvg(frames: Sequence[FlowFrame]) -> str:
    """Superimposed outlines of the frames, each labeled with its time"""
    if len(frames) == 0:
        raise InvalidInputError("No frames to draw")
    radius = max(float(np.max(np.hypot(f.body.vertices[:, 0], f.body.vertices[:, 1]))) for f in frames)
    extent = 1.2 * radius
    stroke = extent / 250.0
    fontSize = extent / 25.0

    lines = _header(extent)
    for frame in frames:
        lines.append(_outline(frame.body, stroke))
        top = frame.body.vertices[int(np.argmax(frame.body.vertices[:, 1]))]
        lines.append(f'  <text x="{_fmt(float(top[0]))}" y="{_fmt(-float(top[1]) - fontSize / 2)}" font-size="{_fmt(fontSize)}" text-anchor="middle">t={frame.t:.6g}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emitSvg(path: Path, content: str) -> None:
    Utils.writeText(path, content)
