#!/usr/bin/env python3

# SPDX-FileCopyrightText: © 2026 logmink developers
# SPDX-License-Identifier: MIT

from __future__ import annotations

import dataclasses
import enum

import numpy as np
import numpy.typing as npt

from ..mesh import TriangleMesh


FloatArray = npt.NDArray[np.float64]


class FemProblem(enum.Enum):
    TORSION = "torsion"
    EIGEN = "eigen"


@dataclasses.dataclass(frozen=True, eq=False)
class BoundarySolution:
    problem: FemProblem
    mesh: TriangleMesh

    field: FloatArray
    """Value per mesh point, zero on the boundary"""

    functionalValue: float
    """Torsional rigidity or principal eigenvalue"""

    reaction: FloatArray
    """Residual of the discrete equation on the boundary rows, `≈ ∫_∂ ∂_n(field) φ_i`, zero on interior points"""

    edgeEnergy: FloatArray = dataclasses.field(default_factory=lambda: np.zeros(0))
    """Per direction pair, `∫|∇field|²` over both antipodal edges"""

    dualityGap: float = 0.0
    """Torsion only: relative disagreement between `∫u` and `∫|∇u|²`"""

    residual: float = 0.0
    """Eigen only: `‖Kv - λMv‖ / ‖Mv‖`"""

    linearIterations: int = 0
    eigenIterations: int = 0

    @property
    def meshH(self) -> float:
        return self.mesh.hMax
