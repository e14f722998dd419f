#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
from typing import Any

import numpy as np
import numpy.typing as npt

from ..common import Utils
from ..geometry import SymmetricPolygon
from ..functionals import FunctionalDescriptor, VariationalMeasure
from ..measures import EvenMeasure


FloatArray = npt.NDArray[np.float64]


@dataclasses.dataclass(frozen=True, eq=False)
class SolveResult:
    functional: FunctionalDescriptor
    measure: EvenMeasure

    body: SymmetricPolygon
    """K₀, scaled so that `F(K₀) = |ν|`"""

    value: float
    """`F(K₀)` as evaluated on the returned body"""

    variational: VariationalMeasure
    surfaceDensity: FloatArray

    residualLinf: float
    """`max_i |ν_i - V_i| / |ν|`"""

    gammaTrace: list[float]
    iterations: int

    objective: float
    """`Φ_ν(K₀) = Σ ν_i log h_i`"""

    objectiveBound: float
    """`Φ_ν` on the disc scaled to `F = |ν|`, which the minimum never exceeds"""

    converged: bool
    gradientLinf: float
    meshH: float|None

    @property
    def objectiveBoundHolds(self) -> bool:
        slack = self.functional.representationTolerance() * abs(self.measure.total)
        return self.objective <= self.objectiveBound + slack

    def toJson(self) -> dict[str, Any]:
        table = []
        for i in range(self.measure.pairCount):
            table.append({
                "theta": Utils.roundFloat(float(self.measure.thetas[i])),
                "nu_mass": Utils.roundFloat(float(self.measure.mass[i])),
                "V_mass": Utils.roundFloat(float(self.variational.mass[i])),
                "surface_density": Utils.roundFloat(float(self.surfaceDensity[i])),
                "support": Utils.roundFloat(float(self.body.support[i])),
            })
        return {
            "functional": self.functional.name,
            "alpha": self.functional.alpha,
            "nu_total": Utils.roundFloat(self.measure.total),
            "F_value": Utils.roundFloat(self.value),
            "iterations": self.iterations,
            "converged": self.converged,
            "residual_linf": Utils.roundFloat(self.residualLinf),
            "gradient_linf": Utils.roundFloat(self.gradientLinf),
            "objective_phi": Utils.roundFloat(self.objective),
            "objective_bound": Utils.roundFloat(self.objectiveBound),
            "objective_bound_holds": self.objectiveBoundHolds,
            "mesh_h": None if self.meshH is None else Utils.roundFloat(self.meshH),
            "table": table,
            "gamma_trace": Utils.roundFloats(self.gammaTrace),
            "body": self.body.toJson(),
        }
