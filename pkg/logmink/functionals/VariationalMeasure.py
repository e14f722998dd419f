#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
from typing import Any

import numpy as np
import numpy.typing as npt

from ..common import Utils
from ..geometry import DirectionPair, SymmetricPolygon


FloatArray = npt.NDArray[np.float64]


@dataclasses.dataclass(frozen=True, eq=False)
class VariationalMeasure:
    """`V_{F,K}({±u_i}) = h_K(u_i) S^{μ_K}_K({±u_i}) / |α|`, which totals `F(K)`"""

    thetas: FloatArray
    mass: FloatArray

    @property
    def total(self) -> float:
        return float(np.sum(self.mass))

    @property
    def pairs(self) -> list[DirectionPair]:
        return [DirectionPair(float(x)) for x in self.thetas]

    @staticmethod
    def fromDensity(polygon: SymmetricPolygon, surfaceDensity: FloatArray, alpha: float) -> VariationalMeasure:
        return VariationalMeasure(polygon.thetas.copy(), polygon.support * surfaceDensity / abs(alpha))

    def toJson(self) -> dict[str, Any]:
        return {
            "pairs": [{"theta": Utils.roundFloat(float(t)), "mass": Utils.roundFloat(float(m))} for t, m in zip(self.thetas, self.mass)],
            "total": Utils.roundFloat(self.total),
        }
